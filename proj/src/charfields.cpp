#include "vinbergkit/charfields.hpp"

namespace vinbergkit {

namespace {

APoly reexpress(const Subfield& sub) {
    std::vector<AlgebraicNumber> c(sub.elements.begin(), sub.elements.end());
    return APoly(c);
}

Subfield coefficient_field(const APoly& p) {
    std::vector<AlgebraicNumber> c(p.coeffs().begin(), p.coeffs().end());
    return subfield_generated(c);
}

AlgebraicNumber eval(const APoly& p, const Rational& x) {
    AlgebraicNumber acc;
    for (int k = p.degree(); k >= 0; --k) acc = acc * AlgebraicNumber(x) + p[k];
    return acc;
}

std::vector<APoly> sturm(const APoly& p) {
    std::vector<APoly> seq{p, derivative(p)};
    while (seq.back().degree() > 0) {
        APoly r = -(seq[seq.size() - 2] % seq.back());
        if (r.is_zero()) break;
        seq.push_back(r);
    }
    return seq;
}

int variations(const std::vector<int>& signs) {
    int last = 0, v = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last && s != last) ++v;
        last = s;
    }
    return v;
}

int variations_at(const std::vector<APoly>& seq, const Rational& x) {
    std::vector<int> s;
    for (const auto& q : seq) s.push_back(eval(q, x).sign());
    return variations(s);
}

int variations_at_infinity(const std::vector<APoly>& seq) {
    std::vector<int> s;
    for (const auto& q : seq) s.push_back(q.lead().sign());
    return variations(s);
}

/// Squarefree with every root at a removed.
APoly prepare(APoly p, const Rational& a) {
    APoly lin{AlgebraicNumber(-a), AlgebraicNumber(1)};
    while (p.degree() > 0 && eval(p, a).is_zero()) p = exact_div(p, lin);
    if (p.degree() > 0) {
        APoly g = gcd(p, derivative(p));
        if (g.degree() > 0) p = exact_div(p, g);
    }
    return p;
}

}  // namespace

CharPolyRecord char_poly_gram(const GramMatrix& gm) {
    CharPolyRecord r;
    r.poly = characteristic_polynomial(gm.G);
    r.field = coefficient_field(r.poly);
    return r;
}

std::vector<AMatrix> tits_matrices(const GramMatrix& gm) {
    const int N = gm.size();
    std::vector<AMatrix> out;
    for (int i = 0; i < N; ++i) {
        AMatrix R = identity<AlgebraicNumber>(N);
        for (int j = 0; j < N; ++j) R(i, j) -= AlgebraicNumber(2) * gm.G(i, j);
        out.push_back(std::move(R));
    }
    return out;
}

namespace {

void check_order(const CoxeterOrder& order, int N) {
    std::vector<char> seen(static_cast<size_t>(N), 0);
    if (static_cast<int>(order.size()) != N) throw ValidationError("Coxeter order must list every vertex once");
    for (int v : order) {
        if (v < 0 || v >= N || seen[static_cast<size_t>(v)]) throw ValidationError("invalid Coxeter order");
        seen[static_cast<size_t>(v)] = 1;
    }
}

}  // namespace

AMatrix coxeter_transformation(const GramMatrix& gm, const CoxeterOrder& order) {
    const int N = gm.size();
    check_order(order, N);
    AMatrix C = identity<AlgebraicNumber>(N);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int i = *it;
        for (Eigen::Index c = 0; c < N; ++c) {
            AlgebraicNumber acc = C(i, c);
            for (int j = 0; j < N; ++j)
                if (!gm.G(i, j).is_zero() && !C(j, c).is_zero()) acc -= AlgebraicNumber(2) * gm.G(i, j) * C(j, c);
            C(i, c) = acc;
        }
    }
    return C;
}

bool check_U_identity(const GramMatrix& gm, const CoxeterOrder& order) {
    const int N = gm.size();
    check_order(order, N);
    AMatrix B(N, N), U(N, N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            B(a, b) = gm.G(order[static_cast<size_t>(a)], order[static_cast<size_t>(b)]);
            U(a, b) = a == b ? AlgebraicNumber(1) : (b > a ? AlgebraicNumber(2) * B(a, b) : AlgebraicNumber(0));
        }
    AMatrix Ut = U.transpose();
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            if (!(U(a, b) + Ut(a, b) == AlgebraicNumber(2) * B(a, b))) return false;
    auto Ui = inverse(U);
    if (!Ui) return false;
    AMatrix lhs = multiply<AlgebraicNumber>(*Ui, Ut);
    AMatrix C = coxeter_transformation(gm, order);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            if (!(-lhs(a, b) == C(order[static_cast<size_t>(a)], order[static_cast<size_t>(b)]))) return false;
    return true;
}

bool is_palindromic(const APoly& p, int sign) {
    const int d = p.degree();
    for (int j = 0; j <= d; ++j) {
        AlgebraicNumber other = sign > 0 ? p[d - j] : -p[d - j];
        if (!(p[j] == other)) return false;
    }
    return true;
}

int count_roots_above(const APoly& p, const Rational& a) {
    APoly q = prepare(p, a);
    if (q.degree() < 1) return 0;
    auto seq = sturm(q);
    return variations_at(seq, a) - variations_at_infinity(seq);
}

CoxeterCharPoly coxeter_char_poly(const GramMatrix& gm, const CoxeterOrder& order) {
    CoxeterCharPoly r;
    r.order = order;
    const int N = gm.size();
    r.radical = N - gm.dim - 1;
    r.chi_T = characteristic_polynomial(coxeter_transformation(gm, order));
    APoly lin{AlgebraicNumber(-1), AlgebraicNumber(1)};
    APoly q = r.chi_T;
    for (int k = 0; k < r.radical; ++k) {
        auto [quot, rem] = divmod(q, lin);
        if (!rem.is_zero())
            throw InternalError("characteristic polynomial of the Coxeter transformation is not divisible by (t-1)^" +
                                std::to_string(r.radical));
        q = quot;
    }
    r.field = coefficient_field(q);
    r.chi_C = reexpress(r.field);
    r.palindromic = is_palindromic(r.chi_C, r.radical % 2 ? -1 : 1);

    APoly s = prepare(r.chi_C, Rational(1));
    if (s.degree() >= 1) {
        auto seq = sturm(s);
        const int vinf = variations_at_infinity(seq);
        r.roots_above_one = variations_at(seq, Rational(1)) - vinf;
        if (r.roots_above_one > 0) {
            Rational hi(1);
            for (int k = 0; k < s.degree(); ++k) {
                Interval e = (s[k] / s.lead()).enclosure(Rational(1, 1024));
                hi += std::max(abs(e.lo), abs(e.hi));
            }
            Rational lo(1);
            while (hi - lo > Rational(1, 1 << 30)) {
                Rational mid = (lo + hi) / Rational(2);
                if (variations_at(seq, mid) - vinf > 0)
                    lo = mid;
                else
                    hi = mid;
            }
            r.lambda = Interval(lo, hi);
        }
    }
    return r;
}

}  // namespace vinbergkit

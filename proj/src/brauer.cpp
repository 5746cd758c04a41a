#include "vinbergkit/brauer.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace vinbergkit {

namespace {

Integer mod(const Integer& a, const Integer& m) {
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

int legendre(const Integer& a, const Integer& p) {
    Integer r = mod(a, p);
    return mpz_legendre(r.get_mpz_t(), p.get_mpz_t());
}

int legendre(const Rational& a, const Integer& p) { return legendre(mod_reduce(a, p), p); }

bool non_split_dyadic(const Place& P) {
    return P.p == 2 && (P.kind == Place::Kind::Inert || P.kind == Place::Kind::Ramified);
}

int tame_symbol(const QuadElem& a, const QuadElem& b, const Place& P) {
    long alpha = valuation(a, P), beta = valuation(b, P);
    QuadElem t = pow(a, beta) * pow(b, -alpha);
    if ((alpha * beta) % 2) t = -t;
    if (P.kind == Place::Kind::Inert) return legendre(t.norm(), P.p);
    return legendre(t.u, P.p);
}

}  // namespace

int hilbert_symbol_padic(long alpha, const Integer& u, long beta, const Integer& v, const Integer& p) {
    if (p == 2) {
        Integer u8 = mod(u, 8), v8 = mod(v, 8);
        auto eps = [](const Integer& x) { return ((x - 1) / 2) % 2 != 0; };
        auto omega = [](const Integer& x) { return ((x * x - 1) / 8) % 2 != 0; };
        int e = (eps(u8) && eps(v8)) + ((alpha & 1) && omega(v8)) + ((beta & 1) && omega(u8));
        return e % 2 ? -1 : 1;
    }
    int s = 1;
    if ((alpha & 1) && (beta & 1) && mod(p, 4) == 3) s = -s;
    if (beta & 1) s *= legendre(u, p);
    if (alpha & 1) s *= legendre(v, p);
    return s;
}

int hilbert_symbol(const Rational& a, const Rational& b, const Integer& p) {
    if (a.is_zero() || b.is_zero()) throw ArithmeticError("Hilbert symbol of zero");
    if (p == 0) return a.sign() < 0 && b.sign() < 0 ? -1 : 1;
    Integer m = p == 2 ? Integer(8) : p;
    long alpha = valuation(a, p), beta = valuation(b, p);
    Integer u = mod_reduce(a / pow(Rational(p), alpha), m);
    Integer v = mod_reduce(b / pow(Rational(p), beta), m);
    return hilbert_symbol_padic(alpha, u, beta, v, p);
}

std::vector<Place> candidate_places(const QuadraticField& f, const std::vector<QuadElem>& elements) {
    std::set<Integer> primes{Integer(2)};
    for (const auto& x : elements) {
        if (x.is_zero()) throw ArithmeticError("zero entry");
        for (const auto& p : support_primes(x)) primes.insert(p);
    }
    std::vector<Place> out = real_places(f);
    for (const auto& p : primes)
        for (const auto& P : places_above(f, p)) out.push_back(P);
    std::sort(out.begin(), out.end());
    return out;
}

int hilbert_symbol(const QuadElem& a, const QuadElem& b, const Place& place, const QuadraticField& f) {
    if (a.is_zero() || b.is_zero()) throw ArithmeticError("Hilbert symbol of zero");
    switch (place.kind) {
        case Place::Kind::Real:
            return a.sign(place.sign) < 0 && b.sign(place.sign) < 0 ? -1 : 1;
        case Place::Kind::Rational:
            return hilbert_symbol(a.u, b.u, place.p);
        case Place::Kind::Split: {
            Integer m = place.p == 2 ? Integer(8) : place.p;
            long prec = place.p == 2 ? 3 : 1;
            PAdicApprox ia = padic_image(a, place, prec), ib = padic_image(b, place, prec);
            return hilbert_symbol_padic(ia.val, mod(ia.unit, m), ib.val, mod(ib.unit, m), place.p);
        }
        case Place::Kind::Inert:
        case Place::Kind::Ramified:
            break;
    }
    if (!non_split_dyadic(place)) return tame_symbol(a, b, place);
    // the only dyadic place: product formula over all other places
    int s = 1;
    for (const auto& P : candidate_places(f, {a, b}))
        if (!(P == place)) s *= hilbert_symbol(a, b, P, f);
    return s;
}

std::vector<std::string> BrauerClass::labels() const {
    std::vector<std::string> out;
    for (const auto& P : ram) out.push_back(P.label(field));
    return out;
}

std::string BrauerClass::str() const {
    if (ram.empty()) return "trivial";
    std::string s = "ramified at {";
    auto l = labels();
    for (size_t i = 0; i < l.size(); ++i) s += (i ? ", " : "") + l[i];
    return s + "}";
}

BrauerClass operator*(const BrauerClass& a, const BrauerClass& b) {
    if (!(a.field == b.field)) throw ArithmeticError("Brauer classes over different fields");
    BrauerClass c{a.field, {}};
    std::set_symmetric_difference(a.ram.begin(), a.ram.end(), b.ram.begin(), b.ram.end(), std::back_inserter(c.ram));
    return c;
}

BrauerClass hasse_invariant(const QuadraticField& f, const std::vector<QuadElem>& diagonal) {
    BrauerClass c{f, {}};
    const Place* dyadic = nullptr;
    auto places = candidate_places(f, diagonal);
    for (const auto& P : places) {
        if (non_split_dyadic(P)) {
            dyadic = &P;
            continue;
        }
        int s = 1;
        for (size_t i = 0; i < diagonal.size(); ++i)
            for (size_t j = i + 1; j < diagonal.size(); ++j) s *= hilbert_symbol(diagonal[i], diagonal[j], P, f);
        if (s < 0) c.ram.push_back(P);
    }
    if (dyadic && c.ram.size() % 2) {
        c.ram.push_back(*dyadic);
        std::sort(c.ram.begin(), c.ram.end());
    }
    return c;
}

BrauerClass quaternion_class(const QuadraticField& f, const QuadElem& a, const QuadElem& b) {
    return hasse_invariant(f, {a, b});
}

BrauerClass witt_invariant(const QuadraticField& f, const std::vector<QuadElem>& diagonal) {
    BrauerClass s = hasse_invariant(f, diagonal);
    QuadElem d = f.element(Rational(1));
    for (const auto& a : diagonal) d = d * a;
    QuadElem m1 = f.element(Rational(-1));
    switch (diagonal.size() % 8) {
        case 1:
        case 2:
            return s;
        case 3:
        case 4:
            return s * quaternion_class(f, m1, -d);
        case 5:
        case 6:
            return s * quaternion_class(f, m1, m1);
        default:
            return s * quaternion_class(f, m1, d);
    }
}

BrauerClass extend_scalars(const BrauerClass& b, const Integer& delta) {
    if (!b.field.is_rationals()) throw ArithmeticError("scalar extension is only implemented from Q");
    QuadraticField L(squarefree_part(delta));
    BrauerClass out{L, {}};
    for (const auto& P : b.ram) {
        if (P.is_real()) {
            for (const auto& R : real_places(L)) out.ram.push_back(R);
            continue;
        }
        for (const auto& Q : places_above(L, P.p))
            if (Q.kind == Place::Kind::Split || Q.kind == Place::Kind::Rational) out.ram.push_back(Q);
    }
    std::sort(out.ram.begin(), out.ram.end());
    return out;
}

std::vector<QuadElem> to_quadratic(const QuadraticField& f, const std::vector<AlgebraicNumber>& xs) {
    std::vector<QuadElem> out;
    for (const auto& x : xs) out.push_back(f.from(x));
    return out;
}

std::string SimilarityVerdict::status_name() const {
    switch (status) {
        case Status::Similar: return "similar";
        case Status::NotSimilar: return "not-similar";
        case Status::Inconclusive: return "inconclusive";
        case Status::Unsupported: return "unsupported";
    }
    return "";
}

namespace {

int negatives_at(const std::vector<QuadElem>& diag, const QuadElem& scale, const Place& P) {
    int k = 0;
    for (const auto& a : diag)
        if ((a * scale).sign(P.sign) < 0) ++k;
    return k;
}

}  // namespace

SimilarityVerdict similarity_decision(const VinbergForm& q1, const VinbergForm& q2, bool quasi_arithmetic) {
    using S = SimilarityVerdict::Status;
    if (q1.dim != q2.dim) throw ValidationError("forms of different dimension");
    if (!same_field(q1.field, q2.field)) throw ValidationError("forms over different fields");
    SimilarityVerdict v;
    const int n = q1.dim;
    AlgebraicNumber d2 = to_field(q2.det, q1.field);
    std::vector<AlgebraicNumber> diag2;
    for (const auto& a : q2.diagonal()) diag2.push_back(to_field(a, q1.field));

    if (n % 2 == 1) {
        if (!same_square_class(q1.det, d2)) {
            v.status = S::NotSimilar;
            v.det_class_differs = true;
            v.reason = "determinant classes differ (ratio-test)";
            v.details = "det classes " + q1.det_class.str() + " and " + q2.det_class.str();
            return v;
        }
        if (!quasi_arithmetic) {
            v.status = S::Inconclusive;
            v.reason = "ratio-test passed; odd dimension without quasi-arithmeticity";
            return v;
        }
        AlgebraicNumber delta = discriminant(q1.det, n);
        if (is_square(delta)) {
            if (q1.field->degree() > 2) {
                v.status = S::Unsupported;
                v.reason = "Witt classes over a field of degree > 2";
                return v;
            }
            QuadraticField f = QuadraticField::of(q1.field);
            BrauerClass c1 = witt_invariant(f, to_quadratic(f, q1.diagonal()));
            BrauerClass c2 = witt_invariant(f, to_quadratic(f, diag2));
            v.status = c1 == c2 ? S::Similar : S::NotSimilar;
            v.reason = c1 == c2 ? "discriminant is a square; Witt classes agree" : "Witt classes differ";
            v.details = "c(q1) " + c1.str() + "; c(q2) " + c2.str();
            return v;
        }
        if (!q1.field->is_rationals()) {
            v.status = S::Unsupported;
            v.reason = "non-square discriminant over a field other than Q";
            return v;
        }
        Integer D = squarefree_class(delta.to_rational());
        QuadraticField Q;
        BrauerClass c1 = extend_scalars(witt_invariant(Q, to_quadratic(Q, q1.diagonal())), D);
        BrauerClass c2 = extend_scalars(witt_invariant(Q, to_quadratic(Q, diag2)), D);
        v.status = c1 == c2 ? S::Similar : S::NotSimilar;
        v.reason = c1 == c2 ? "Witt classes agree over Q(sqrt(" + D.get_str() + "))"
                            : "Witt classes differ over Q(sqrt(" + D.get_str() + "))";
        v.details = "c(q1) " + c1.str() + "; c(q2) " + c2.str();
        return v;
    }

    if (q1.field->degree() > 2) {
        v.status = S::Unsupported;
        v.reason = "Hasse invariants over a field of degree > 2";
        return v;
    }
    QuadraticField f = QuadraticField::of(q1.field);
    auto a1 = to_quadratic(f, q1.diagonal());
    auto a2 = to_quadratic(f, diag2);
    QuadElem lambda = f.from(q1.det / d2);
    BrauerClass s1 = hasse_invariant(f, a1), s2 = hasse_invariant(f, a2);
    BrauerClass rhs = n % 4 == 0 ? s2 : s2 * quaternion_class(f, lambda, f.element(Rational(-1)));
    std::ostringstream det;
    det << "s(q1) " << s1.str() << "; s(q2) " << s2.str() << "; lambda " << lambda.str();
    v.details = det.str();
    if (!(s1 == rhs)) {
        v.status = S::NotSimilar;
        v.reason = n % 4 == 0 ? "Hasse invariants differ" : "s(q1) differs from (lambda,-1) s(q2)";
        return v;
    }
    for (const auto& P : real_places(f)) {
        if (negatives_at(a1, f.element(Rational(1)), P) != negatives_at(a2, lambda, P)) {
            v.status = S::NotSimilar;
            v.reason = "signatures of q1 and lambda q2 differ at " + P.label(f);
            return v;
        }
    }
    v.status = S::Similar;
    v.reason = "Hasse invariants and real signatures agree";
    return v;
}

}  // namespace vinbergkit

#include "vinbergkit/vform.hpp"

#include <algorithm>

namespace vinbergkit {

AlgebraicNumber path_coefficient(const GramMatrix& gm, const VinbergPath& path) {
    if (path.empty()) throw Error("empty Vinberg path");
    if (path.size() == 1) return AlgebraicNumber(2);
    AlgebraicNumber c(Rational(ipow(2, path.size() - 1)));
    for (size_t k = 0; k + 1 < path.size(); ++k) c *= gm.G(path[k], path[k + 1]);
    return c;
}

AlgebraicNumber inner_product(const GramMatrix& gm, const VinbergField& vf, const VinbergPath& p,
                              const VinbergPath& q) {
    AlgebraicNumber x = path_coefficient(gm, p) * path_coefficient(gm, q) * gm.G(p.back(), q.back());
    auto in = express_in(x, vf.field);
    if (!in) throw InternalError("inner product " + x.str() + " is not in the Vinberg field");
    return *in;
}

std::vector<VinbergPath> candidate_paths(const GramMatrix& gm, int base, int max_length) {
    const int N = gm.size();
    if (base < 0 || base >= N) throw ValidationError("base vertex out of range");
    std::vector<VinbergPath> out{{base}}, level{{base}};
    for (int len = 1; len <= max_length && !level.empty(); ++len) {
        std::vector<VinbergPath> next;
        for (const auto& p : level)
            for (int w = 0; w < N; ++w) {
                if (gm.G(p.back(), w).is_zero() || std::find(p.begin(), p.end(), w) != p.end()) continue;
                VinbergPath q = p;
                q.push_back(w);
                next.push_back(std::move(q));
            }
        std::sort(next.begin(), next.end());
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

std::vector<VinbergPath> select_basis(const GramMatrix& gm, const std::vector<VinbergPath>& candidates) {
    const int want = gm.dim + 1;
    std::vector<VinbergPath> kept;
    std::vector<int> rows;
    for (const auto& p : candidates) {
        if (path_coefficient(gm, p).is_zero()) continue;
        int last = p.back();
        if (std::find(rows.begin(), rows.end(), last) != rows.end()) continue;
        AMatrix R(static_cast<Eigen::Index>(rows.size() + 1), gm.G.cols());
        for (size_t i = 0; i < rows.size(); ++i) R.row(static_cast<Eigen::Index>(i)) = gm.G.row(rows[i]);
        R.row(static_cast<Eigen::Index>(rows.size())) = gm.G.row(last);
        if (rank(R) != static_cast<int>(rows.size()) + 1) continue;
        rows.push_back(last);
        kept.push_back(p);
        if (static_cast<int>(kept.size()) == want) return kept;
    }
    throw ValidationError("found only " + std::to_string(kept.size()) + " independent Vinberg vectors, expected " +
                          std::to_string(want));
}

std::vector<VinbergPath> select_basis(const GramMatrix& gm, int base) {
    return select_basis(gm, candidate_paths(gm, base, gm.size() - 1));
}

VinbergForm vinberg_form(const GramMatrix& gm, const VinbergField& vf, const std::vector<VinbergPath>& basis) {
    VinbergForm f;
    f.field = vf.field;
    f.dim = gm.dim;
    f.base = basis.empty() ? 0 : basis.front().front();
    f.basis = basis;
    const auto m = static_cast<Eigen::Index>(basis.size());
    AlgebraicNumber zero = *coerce(AlgebraicNumber(0), vf.field);
    f.matrix = AMatrix::Constant(m, m, zero);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = i; j < m; ++j) {
            AlgebraicNumber x = inner_product(gm, vf, basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)]);
            f.matrix(i, j) = x;
            f.matrix(j, i) = x;
        }
    f.diagonalization = diagonalize(f.matrix);
    f.det = *coerce(AlgebraicNumber(1), vf.field);
    for (const auto& d : f.diagonal()) {
        if (d.is_zero()) throw ValidationError("Vinberg form is degenerate");
        f.det *= d;
        (d.sign() > 0 ? f.signature.positive : f.signature.negative)++;
    }
    f.det_class = square_class_representative(f.det);
    return f;
}

VinbergForm vinberg_form(const GramMatrix& gm, const VinbergField& vf, int base) {
    return vinberg_form(gm, vf, select_basis(gm, base));
}

AlgebraicNumber square_class_representative(const AlgebraicNumber& x) {
    if (x.is_zero()) throw ArithmeticError("square class of zero");
    if (x.is_rational()) return *coerce(AlgebraicNumber(Rational(squarefree_class(x.to_rational()))), x.field());
    Integer L = 1;
    for (const auto& c : x.coords()) L = lcm(L, c.den());
    std::vector<Rational> c = x.coords();
    Integer g = 0;
    for (auto& a : c) {
        a *= Rational(Integer(L * L));
        g = gcd(g, a.num());
    }
    Integer s = squarefree_part(g);
    Integer m2 = g / s;
    for (auto& a : c) a /= Rational(m2);
    return AlgebraicNumber(x.field(), c);
}

bool same_square_class(const AlgebraicNumber& a, const AlgebraicNumber& b) { return is_square(a / b).has_value(); }

AlgebraicNumber discriminant(const AlgebraicNumber& det, int n) {
    long e = static_cast<long>(n) * (n + 1) / 2;
    return e % 2 ? -det : det;
}

}  // namespace vinbergkit

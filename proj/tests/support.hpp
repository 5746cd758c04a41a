#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "vinbergkit/report.hpp"

namespace testkit {

using namespace vinbergkit;

inline std::string corpus(const std::string& rel) { return std::string(VINBERGKIT_CORPUS_DIR) + "/" + rel; }

inline const std::vector<std::string>& corpus_files() {
    static const std::vector<std::string> files = {
        "cube/g1.cox",         "cube/g2.cox",          "cube/g3.cox",           "napier/g1.cox",
        "napier/g2.cox",       "pyramids/g1.cox",      "pyramids/g2.cox",       "simplices/336.cox",
        "simplices/435.cox",   "simplices/5333.cox",   "simplices/535.cox",     "simplices/536.cox",
    };
    return files;
}

struct Loaded {
    CoxeterGraph graph;
    GramMatrix gm;
    VinbergField vf;
};

inline Loaded load(const std::string& rel) {
    Loaded l;
    l.graph = load_graph(corpus(rel));
    l.gm = gram_matrix(l.graph);
    l.vf = vinberg_field(l.gm);
    return l;
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20240611);
    return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational random_rational(long num = 9, long den = 4) {
    return Rational(Integer(uniform(-num, num)), Integer(uniform(1, den)));
}

// ---------------------------------------------------------------------------
// Floating point Gram matrix straight from the labels.

inline std::vector<std::vector<double>> float_gram(const CoxeterGraph& g) {
    std::vector<std::vector<double>> G(static_cast<size_t>(g.rank), std::vector<double>(static_cast<size_t>(g.rank), 0.0));
    for (int i = 0; i < g.rank; ++i) G[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1.0;
    for (const auto& [key, e] : g.edges) {
        double v = 0;
        if (e.kind == EdgeLabel::Kind::Angle) v = -std::cos(std::numbers::pi / static_cast<double>(e.m));
        if (e.kind == EdgeLabel::Kind::Parallel) v = -1.0;
        if (e.kind == EdgeLabel::Kind::Dotted) v = -e.weight.to_double();
        G[static_cast<size_t>(key.first)][static_cast<size_t>(key.second)] = v;
        G[static_cast<size_t>(key.second)][static_cast<size_t>(key.first)] = v;
    }
    return G;
}

inline double float_cycle(const std::vector<std::vector<double>>& G, const std::vector<int>& c) {
    double v = 1;
    for (size_t k = 0; k < c.size(); ++k)
        v *= 2 * G[static_cast<size_t>(c[k])][static_cast<size_t>(c[(k + 1) % c.size()])];
    return v;
}

// ---------------------------------------------------------------------------
// Characteristic polynomial by interpolating det(tI - M) at t = 0..n, and
// eigenvalue signs from a Sturm chain.

inline Rational det_gauss(std::vector<std::vector<Rational>> A) {
    const size_t n = A.size();
    Rational det(1);
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && A[p][c].is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            std::swap(A[p], A[c]);
            det = -det;
        }
        det *= A[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            if (A[r][c].is_zero()) continue;
            Rational f = A[r][c] / A[c][c];
            for (size_t k = c; k < n; ++k) A[r][k] -= f * A[c][k];
        }
    }
    return det;
}

inline std::vector<Rational> charpoly_interp(const std::vector<std::vector<Rational>>& M) {
    const size_t n = M.size();
    std::vector<Rational> xs, ys;
    for (size_t t = 0; t <= n; ++t) {
        auto A = M;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) A[i][j] = (i == j ? Rational(static_cast<long>(t)) : Rational(0)) - M[i][j];
        xs.push_back(Rational(static_cast<long>(t)));
        ys.push_back(det_gauss(A));
    }
    std::vector<Rational> coeff(n + 1, Rational(0));
    for (size_t i = 0; i <= n; ++i) {
        std::vector<Rational> basis{Rational(1)};
        Rational denom(1);
        for (size_t j = 0; j <= n; ++j) {
            if (j == i) continue;
            std::vector<Rational> next(basis.size() + 1, Rational(0));
            for (size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= xs[j] * basis[k];
            }
            basis = next;
            denom *= xs[i] - xs[j];
        }
        for (size_t k = 0; k < basis.size(); ++k) coeff[k] += ys[i] * basis[k] / denom;
    }
    return coeff;
}

using RVec = std::vector<Rational>;

inline void trim(RVec& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline RVec prem(RVec a, const RVec& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
        trim(a);
    }
    return a;
}

inline int sign_at(const RVec& p, const Rational& x) {
    Rational v(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
    return v.sign();
}

/// Distinct negative roots and multiplicity of the root 0.
inline std::pair<int, int> negative_and_zero_roots(RVec p) {
    trim(p);
    int zeros = 0;
    while (!p.empty() && p.front().is_zero()) {
        p.erase(p.begin());
        ++zeros;
    }
    std::vector<RVec> chain{p};
    RVec d;
    for (size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Rational(static_cast<long>(k)));
    if (!d.empty()) chain.push_back(d);
    while (chain.size() > 1 && chain.back().size() > 1) {
        RVec r = prem(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        chain.push_back(r);
    }
    auto variations = [&](const Rational& x, bool minus_inf) {
        int last = 0, v = 0;
        for (const auto& q : chain) {
            int s;
            if (minus_inf)
                s = (q.size() % 2 == 1 ? 1 : -1) * q.back().sign();
            else
                s = sign_at(q, x);
            if (s == 0) continue;
            if (last && s != last) ++v;
            last = s;
        }
        return v;
    };
    int distinct_negative = variations(Rational(0), true) - variations(Rational(0), false);
    return {distinct_negative, zeros};
}

/// PSD oracle: no negative root of the characteristic polynomial.
inline bool psd_oracle(const std::vector<std::vector<Rational>>& M) {
    return negative_and_zero_roots(charpoly_interp(M)).first == 0;
}

// ---------------------------------------------------------------------------
// Hilbert symbols over Q_p by counting primitive solutions of
// a x^2 + b y^2 = z^2 modulo p^3 (p odd) or 2^5, for squarefree a, b.

inline long modp(long x, long m) { return ((x % m) + m) % m; }

inline int hilbert_oracle_Q(long a, long b, long p) {
    if (p == 0) return a < 0 && b < 0 ? -1 : 1;
    const long m = p == 2 ? 32 : p * p * p;
    std::vector<char> sq(static_cast<size_t>(m), 0), unit_sq(static_cast<size_t>(m), 0);
    for (long z = 0; z < m; ++z) {
        sq[static_cast<size_t>(z * z % m)] = 1;
        if (z % p) unit_sq[static_cast<size_t>(z * z % m)] = 1;
    }
    for (long x = 0; x < m; ++x)
        for (long y = 0; y < m; ++y) {
            long v = modp(modp(a, m) * (x * x % m) % m + modp(b, m) * (y * y % m) % m, m);
            bool prim_xy = x % p != 0 || y % p != 0;
            if (prim_xy ? sq[static_cast<size_t>(v)] : unit_sq[static_cast<size_t>(v)]) return 1;
        }
    return -1;
}

inline long squarefree_part_long(long x) {
    long s = x < 0 ? -1 : 1;
    x = std::labs(x);
    for (long p = 2; p * p <= x; ++p)
        while (x % (p * p) == 0) x /= p * p;
    return s * x;
}

// ---------------------------------------------------------------------------
// Quotients O_K / P^k for Z[w] with w^2 = t w + n, stored as u + v w with
// u mod mu and v mod mv.

struct QuotRing {
    long t, n, mu, mv;

    std::pair<long, long> mul(std::pair<long, long> a, std::pair<long, long> b) const {
        long u = a.first * b.first + n * a.second * b.second;
        long v = a.first * b.second + a.second * b.first + t * a.second * b.second;
        return {modp(u, mu), modp(v, mv)};
    }
    std::pair<long, long> add(std::pair<long, long> a, std::pair<long, long> b) const {
        return {modp(a.first + b.first, mu), modp(a.second + b.second, mv)};
    }
    std::pair<long, long> red(long u, long v) const { return {modp(u, mu), modp(v, mv)}; }
    size_t index(std::pair<long, long> a) const { return static_cast<size_t>(a.first * mv + a.second); }
};

/// Solvability of a x^2 + b y^2 = z^2 with one coordinate equal to 1.
inline int hilbert_oracle_quot(const QuotRing& R, std::pair<long, long> a, std::pair<long, long> b) {
    const size_t size = static_cast<size_t>(R.mu * R.mv);
    std::vector<char> sq(size, 0);
    std::vector<std::pair<long, long>> elems;
    for (long u = 0; u < R.mu; ++u)
        for (long v = 0; v < R.mv; ++v) elems.push_back({u, v});
    std::vector<std::pair<long, long>> squares(size);
    for (const auto& e : elems) {
        squares[R.index(e)] = R.mul(e, e);
        sq[R.index(R.mul(e, e))] = 1;
    }
    const std::pair<long, long> one{1, 0};
    for (const auto& y : elems)
        if (sq[R.index(R.add(a, R.mul(b, squares[R.index(y)])))]) return 1;
    for (const auto& x : elems)
        if (sq[R.index(R.add(R.mul(a, squares[R.index(x)]), b))]) return 1;
    for (const auto& x : elems) {
        auto ax = R.mul(a, squares[R.index(x)]);
        for (const auto& y : elems)
            if (R.add(ax, R.mul(b, squares[R.index(y)])) == one) return 1;
    }
    return -1;
}

/// Random symmetric rational matrix of the given size.
inline QMatrix random_symmetric(int n, long range = 6) {
    QMatrix M(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Rational r = random_rational(range, 3);
            M(i, j) = r;
            M(j, i) = r;
        }
    return M;
}

inline std::vector<std::vector<Rational>> to_rows(const QMatrix& M) {
    std::vector<std::vector<Rational>> out(static_cast<size_t>(M.rows()));
    for (Eigen::Index i = 0; i < M.rows(); ++i)
        for (Eigen::Index j = 0; j < M.cols(); ++j) out[static_cast<size_t>(i)].push_back(M(i, j));
    return out;
}

inline std::vector<int> random_permutation(int n) {
    std::vector<int> p(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
    std::shuffle(p.begin(), p.end(), rng());
    return p;
}

}  // namespace testkit

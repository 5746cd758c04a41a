#include "vinbergkit/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

namespace vinbergkit {

namespace {

using u64 = std::uint64_t;
using ZPoly = std::vector<Integer>;
using FpPoly = std::vector<u64>;

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x], p < 2^31
// ---------------------------------------------------------------------------

struct Fp {
    u64 p;

    u64 add(u64 a, u64 b) const { return (a + b) % p; }
    u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
    u64 mul(u64 a, u64 b) const { return a * b % p; }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p - 2); }

    static void trim(FpPoly& a) {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    static int deg(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

    FpPoly reduce(const ZPoly& f) const {
        FpPoly out(f.size());
        Integer m = static_cast<unsigned long>(p), r;
        for (size_t i = 0; i < f.size(); ++i) {
            mpz_fdiv_r(r.get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
            out[i] = r.get_ui();
        }
        trim(out);
        return out;
    }

    FpPoly sub(FpPoly a, const FpPoly& b) const {
        if (b.size() > a.size()) a.resize(b.size(), 0);
        for (size_t i = 0; i < b.size(); ++i) a[i] = sub(a[i], b[i]);
        trim(a);
        return a;
    }
    FpPoly add(FpPoly a, const FpPoly& b) const {
        if (b.size() > a.size()) a.resize(b.size(), 0);
        for (size_t i = 0; i < b.size(); ++i) a[i] = add(a[i], b[i]);
        trim(a);
        return a;
    }
    FpPoly mul(const FpPoly& a, const FpPoly& b) const {
        if (a.empty() || b.empty()) return {};
        FpPoly c(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
        }
        trim(c);
        return c;
    }
    void divmod(const FpPoly& a, const FpPoly& b, FpPoly* q, FpPoly* r) const {
        FpPoly rem = a;
        int db = deg(b);
        u64 li = inv(b.back());
        FpPoly quo(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
        for (int i = deg(rem); i >= db; --i) {
            u64 c = rem[static_cast<size_t>(i)];
            if (!c) continue;
            u64 f = mul(c, li);
            quo[static_cast<size_t>(i - db)] = f;
            for (int j = 0; j <= db; ++j) {
                size_t k = static_cast<size_t>(i - db + j);
                rem[k] = sub(rem[k], mul(f, b[static_cast<size_t>(j)]));
            }
        }
        trim(rem);
        trim(quo);
        if (q) *q = std::move(quo);
        if (r) *r = std::move(rem);
    }
    FpPoly mod(const FpPoly& a, const FpPoly& b) const {
        FpPoly r;
        divmod(a, b, nullptr, &r);
        return r;
    }
    FpPoly quot(const FpPoly& a, const FpPoly& b) const {
        FpPoly q;
        divmod(a, b, &q, nullptr);
        return q;
    }
    FpPoly monic(FpPoly a) const {
        if (a.empty()) return a;
        u64 li = inv(a.back());
        for (auto& c : a) c = mul(c, li);
        return a;
    }
    FpPoly gcd(FpPoly a, FpPoly b) const {
        while (!b.empty()) {
            FpPoly r = mod(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(a);
    }
    /// s*a + t*b = 1 for coprime a, b.
    void bezout(const FpPoly& a, const FpPoly& b, FpPoly& s, FpPoly& t) const {
        FpPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
        while (!r1.empty()) {
            FpPoly q, r;
            divmod(r0, r1, &q, &r);
            r0 = std::move(r1);
            r1 = std::move(r);
            FpPoly s2 = sub(s0, mul(q, s1));
            FpPoly t2 = sub(t0, mul(q, t1));
            s0 = std::move(s1);
            s1 = std::move(s2);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        if (r0.size() != 1) throw InternalError("Hensel factors not coprime mod p");
        u64 li = inv(r0[0]);
        for (auto& c : s0) c = mul(c, li);
        for (auto& c : t0) c = mul(c, li);
        s = std::move(s0);
        t = std::move(t0);
    }
    FpPoly powmod(FpPoly base, const Integer& e, const FpPoly& m) const {
        FpPoly r{1};
        base = mod(base, m);
        size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
        for (size_t i = bits; i-- > 0;) {
            r = mod(mul(r, r), m);
            if (mpz_tstbit(e.get_mpz_t(), i)) r = mod(mul(r, base), m);
        }
        return r;
    }
    FpPoly derivative(const FpPoly& a) const {
        FpPoly d;
        for (size_t i = 1; i < a.size(); ++i) d.push_back(mul(a[i], i % p));
        trim(d);
        return d;
    }

    /// Distinct-degree factorization of a monic squarefree polynomial.
    std::vector<std::pair<FpPoly, int>> ddf(FpPoly f) const {
        std::vector<std::pair<FpPoly, int>> out;
        FpPoly x{0, 1};
        FpPoly h = x;
        Integer pe = static_cast<unsigned long>(p);
        for (int d = 1; 2 * d <= deg(f); ++d) {
            h = powmod(h, pe, f);
            FpPoly g = gcd(sub(h, x), f);
            if (deg(g) > 0) {
                out.emplace_back(g, d);
                f = quot(f, g);
                h = mod(h, f);
            }
        }
        if (deg(f) > 0) out.emplace_back(f, deg(f));
        return out;
    }

    /// Equal-degree splitting of a product of irreducibles of degree d.
    void edf(const FpPoly& g, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) const {
        if (deg(g) == d) {
            out.push_back(g);
            return;
        }
        Integer e = ipow(Integer(static_cast<unsigned long>(p)), static_cast<unsigned long>(d));
        e = (e - 1) / 2;
        std::uniform_int_distribution<u64> coef(0, p - 1);
        for (;;) {
            FpPoly a(static_cast<size_t>(deg(g)));
            for (auto& c : a) c = coef(rng);
            trim(a);
            if (deg(a) < 1) continue;
            FpPoly b = powmod(a, e, g);
            b = sub(b, FpPoly{1});
            FpPoly c = gcd(b, g);
            if (deg(c) > 0 && deg(c) < deg(g)) {
                edf(c, d, rng, out);
                edf(quot(g, c), d, rng, out);
                return;
            }
        }
    }
};

// ---------------------------------------------------------------------------
// Integer polynomial helpers
// ---------------------------------------------------------------------------

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    ztrim(c);
    return c;
}

/// Reduce coefficients into [0, m).
void zmod(ZPoly& a, const Integer& m) {
    for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    ztrim(a);
}

/// Symmetric residues in (-m/2, m/2].
void zsymmetric(ZPoly& a, const Integer& m) {
    Integer half = m / 2;
    for (auto& c : a) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (c > half) c -= m;
    }
    ztrim(a);
}

ZPoly zcontent_free(ZPoly a) {
    Integer g = 0;
    for (const auto& c : a) g = gcd(g, c);
    if (g == 0) return a;
    if (a.back() < 0) g = -g;
    for (auto& c : a) c /= g;
    return a;
}

/// Exact division over Z; false if b does not divide a.
bool zdivides(const ZPoly& a, const ZPoly& b, ZPoly* quotient) {
    ZPoly r = a;
    int db = zdeg(b);
    if (zdeg(a) < db) return false;
    ZPoly q(static_cast<size_t>(zdeg(a) - db + 1), Integer(0));
    for (int i = zdeg(a); i >= db; --i) {
        Integer& top = r[static_cast<size_t>(i)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) return false;
        Integer f = top / b.back();
        q[static_cast<size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j) r[static_cast<size_t>(i - db + j)] -= f * b[static_cast<size_t>(j)];
    }
    for (int i = 0; i < db; ++i)
        if (r[static_cast<size_t>(i)] != 0) return false;
    if (quotient) {
        ztrim(q);
        *quotient = std::move(q);
    }
    return true;
}

ZPoly from_fp(const FpPoly& a) {
    ZPoly out;
    out.reserve(a.size());
    for (u64 c : a) out.emplace_back(static_cast<unsigned long>(c));
    return out;
}

// ---------------------------------------------------------------------------
// Hensel lifting
// ---------------------------------------------------------------------------

/// Lifts A0*B0 = target (mod p) to A*B = target (mod p^a); A0, B0 monic.
void lift_pair(const Fp& F, const ZPoly& target, const FpPoly& A0, const FpPoly& B0, int a,
               ZPoly& A, ZPoly& B) {
    FpPoly s, t;
    F.bezout(A0, B0, s, t);
    A = from_fp(A0);
    B = from_fp(B0);
    Integer p = static_cast<unsigned long>(F.p);
    Integer pk = p;
    for (int k = 1; k < a; ++k) {
        Integer next = pk * p;
        ZPoly diff = target;
        ZPoly ab = zmul(A, B);
        if (ab.size() > diff.size()) diff.resize(ab.size(), Integer(0));
        for (size_t i = 0; i < ab.size(); ++i) diff[i] -= ab[i];
        zmod(diff, next);
        for (auto& c : diff) c /= pk;
        FpPoly e = F.reduce(diff);
        FpPoly dB = F.mod(F.mul(s, e), B0);
        FpPoly dA = F.mod(F.mul(t, e), A0);
        for (size_t i = 0; i < dA.size(); ++i) A[i] += pk * static_cast<unsigned long>(dA[i]);
        for (size_t i = 0; i < dB.size(); ++i) B[i] += pk * static_cast<unsigned long>(dB[i]);
        pk = next;
    }
}

void lift_tree(const Fp& F, const ZPoly& target, const std::vector<FpPoly>& facs, int a,
               const Integer& M, std::vector<ZPoly>& out) {
    if (facs.size() == 1) {
        ZPoly t = target;
        zmod(t, M);
        out.push_back(std::move(t));
        return;
    }
    size_t half = facs.size() / 2;
    std::vector<FpPoly> left(facs.begin(), facs.begin() + static_cast<long>(half));
    std::vector<FpPoly> right(facs.begin() + static_cast<long>(half), facs.end());
    FpPoly A0{1}, B0{1};
    for (const auto& f : left) A0 = F.mul(A0, f);
    for (const auto& f : right) B0 = F.mul(B0, f);
    ZPoly A, B;
    lift_pair(F, target, A0, B0, a, A, B);
    zmod(A, M);
    zmod(B, M);
    lift_tree(F, A, left, a, M, out);
    lift_tree(F, B, right, a, M, out);
}

// ---------------------------------------------------------------------------
// Zassenhaus
// ---------------------------------------------------------------------------

const std::vector<u64>& candidate_primes() {
    static const std::vector<u64> primes = [] {
        std::vector<u64> ps;
        for (u64 n = 1009; ps.size() < 400; n += 2) {
            bool prime = true;
            for (u64 d = 3; d * d <= n; d += 2)
                if (n % d == 0) {
                    prime = false;
                    break;
                }
            if (prime) ps.push_back(n);
        }
        return ps;
    }();
    return primes;
}

/// f primitive, squarefree, deg >= 1, f(0) != 0. Returns primitive irreducible factors.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
    int n = zdeg(f);
    if (n <= 1) return {f};

    struct Choice {
        Fp F;
        std::vector<std::pair<FpPoly, int>> ddf;
        size_t count;
    };
    std::vector<Choice> choices;
    for (u64 p : candidate_primes()) {
        Fp F{p};
        if (mpz_divisible_ui_p(f.back().get_mpz_t(), static_cast<unsigned long>(p))) continue;
        FpPoly fp = F.reduce(f);
        if (F.gcd(fp, F.derivative(fp)).size() != 1) continue;
        auto d = F.ddf(F.monic(fp));
        size_t count = 0;
        for (const auto& [g, k] : d) count += static_cast<size_t>(Fp::deg(g) / k);
        if (count == 1) return {f};
        choices.push_back({F, std::move(d), count});
        if (choices.size() >= 8) break;
    }
    if (choices.empty()) throw InternalError("no good prime for factorization");
    auto best = std::min_element(choices.begin(), choices.end(),
                                 [](const Choice& a, const Choice& b) { return a.count < b.count; });
    const Fp& F = best->F;

    std::mt19937_64 rng(0x5eed + F.p);
    std::vector<FpPoly> local;
    for (const auto& [g, k] : best->ddf) F.edf(g, k, rng, local);

    // Coefficient bound for factors: 2^n * ||f||_2 * |lc|.
    Integer norm2 = 0;
    for (const auto& c : f) norm2 += c * c;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
    Integer bound = (root + 1) * ipow(Integer(2), static_cast<unsigned long>(n)) * abs(f.back());
    Integer p = static_cast<unsigned long>(F.p);
    Integer M = p;
    int a = 1;
    while (M <= 2 * bound) {
        M *= p;
        ++a;
    }

    Integer lc_inv;
    mpz_invert(lc_inv.get_mpz_t(), f.back().get_mpz_t(), M.get_mpz_t());
    ZPoly target = f;
    for (auto& c : target) c *= lc_inv;
    zmod(target, M);

    std::vector<ZPoly> lifted;
    lift_tree(F, target, local, a, M, lifted);

    std::vector<ZPoly> result;
    ZPoly G = f;
    size_t k = 1;
    while (2 * k <= lifted.size()) {
        bool found = false;
        std::vector<size_t> idx(k);
        for (size_t i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            ZPoly cand{G.back()};
            for (size_t i : idx) {
                cand = zmul(cand, lifted[i]);
                zmod(cand, M);
            }
            zsymmetric(cand, M);
            cand = zcontent_free(cand);
            ZPoly quotient;
            if (!cand.empty() && mpz_divisible_p(G[0].get_mpz_t(), cand[0].get_mpz_t()) &&
                zdivides(G, cand, &quotient)) {
                result.push_back(cand);
                G = quotient;
                for (size_t i = k; i-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[i]));
                found = true;
                break;
            }
            size_t i = k;
            while (i > 0 && idx[i - 1] == lifted.size() - k + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++k;
    }
    if (zdeg(G) > 0) result.push_back(zcontent_free(G));
    return result;
}

bool poly_less(const QPoly& a, const QPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

}  // namespace

std::vector<QPoly> irreducible_factors(const QPoly& f) {
    if (f.is_zero()) throw ArithmeticError("factorization of the zero polynomial");
    std::vector<QPoly> out;
    if (f.degree() == 0) return out;
    QPoly g = squarefree_part(f);
    if (g[0].is_zero()) {
        out.push_back(QPoly::x());
        g = exact_div(g, QPoly::x());
    }
    if (g.degree() >= 1) {
        for (const auto& z : zassenhaus(integer_coeffs(primitive_part(g))))
            out.push_back(monic(from_integers(z)));
    }
    std::sort(out.begin(), out.end(), poly_less);
    return out;
}

bool is_irreducible(const QPoly& f) {
    if (f.degree() < 1) return false;
    if (!is_squarefree(f)) return false;
    auto fs = irreducible_factors(f);
    return fs.size() == 1;
}

}  // namespace vinbergkit

#include "vinbergkit/real_roots.hpp"

#include <algorithm>

namespace vinbergkit {

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
    if (a.lo.sign() >= 0 && b.lo.sign() >= 0) return {a.lo * b.lo, a.hi * b.hi};
    Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    auto [mn, mx] = std::minmax_element(p, p + 4);
    return {*mn, *mx};
}

Interval operator*(const Rational& s, const Interval& a) {
    if (s.sign() >= 0) return {s * a.lo, s * a.hi};
    return {s * a.hi, s * a.lo};
}

Interval evaluate(const QPoly& p, const Interval& x) {
    Interval acc(Rational(0));
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * x;
        acc.lo += p[i];
        acc.hi += p[i];
    }
    return acc;
}

int sign_at(const QPoly& p, const Rational& x) { return p(x).sign(); }

namespace {

/// Multiply by a positive rational making the coefficients coprime integers.
QPoly positive_normalize(const QPoly& p) {
    if (p.is_zero()) return p;
    QPoly q = primitive_part(p);
    if (p.lead().sign() < 0) q = -q;
    return q;
}

}  // namespace

std::vector<QPoly> sturm_sequence(const QPoly& p) {
    std::vector<QPoly> seq;
    if (p.is_zero()) return seq;
    seq.push_back(positive_normalize(p));
    QPoly d = derivative(p);
    if (d.is_zero()) return seq;
    seq.push_back(positive_normalize(d));
    for (;;) {
        QPoly r = seq[seq.size() - 2] % seq.back();
        if (r.is_zero()) break;
        seq.push_back(positive_normalize(-r));
    }
    return seq;
}

int sign_variations(const std::vector<QPoly>& seq, const Rational& x) {
    int last = 0, count = 0;
    for (const auto& s : seq) {
        int v = sign_at(s, x);
        if (v == 0) continue;
        if (last != 0 && v != last) ++count;
        last = v;
    }
    return count;
}

namespace {

int variations_at_infinity(const std::vector<QPoly>& seq, bool positive) {
    int last = 0, count = 0;
    for (const auto& s : seq) {
        int v = s.lead().sign();
        if (!positive && s.degree() % 2) v = -v;
        if (v == 0) continue;
        if (last != 0 && v != last) ++count;
        last = v;
    }
    return count;
}

}  // namespace

int count_real_roots(const QPoly& p) {
    if (p.degree() < 1) return 0;
    auto seq = sturm_sequence(p);
    return variations_at_infinity(seq, false) - variations_at_infinity(seq, true);
}

int count_roots(const std::vector<QPoly>& sturm, const Rational& a, const Rational& b) {
    return sign_variations(sturm, a) - sign_variations(sturm, b);
}

Rational root_bound(const QPoly& p) {
    if (p.degree() < 1) return Rational(1);
    Rational m(0);
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, abs(p[i] / p.lead()));
    Rational b(1);
    while (b <= m + Rational(1)) b *= Rational(2);
    return b;
}

namespace {

void isolate(const QPoly& f, const std::vector<QPoly>& seq, Rational a, Rational b, int va, int vb,
             std::vector<Interval>& out) {
    int c = va - vb;
    if (c == 0) return;
    if (c == 1) {
        out.emplace_back(a, b);
        return;
    }
    Rational m = (a + b) / Rational(2);
    while (sign_at(f, m) == 0) {
        // Record the rational root and continue on both sides of it.
        Rational l = (a + m) / Rational(2), r = (m + b) / Rational(2);
        while (sign_at(f, l) == 0 || count_roots(seq, l, m) != 1) l = (l + m) / Rational(2);
        while (sign_at(f, r) == 0 || count_roots(seq, m, r) != 0) r = (m + r) / Rational(2);
        int vl = sign_variations(seq, l), vr = sign_variations(seq, r);
        isolate(f, seq, a, l, va, vl, out);
        out.emplace_back(m);
        isolate(f, seq, r, b, vr, vb, out);
        return;
    }
    int vm = sign_variations(seq, m);
    isolate(f, seq, a, m, va, vm, out);
    isolate(f, seq, m, b, vm, vb, out);
}

}  // namespace

std::vector<Interval> isolate_real_roots(const QPoly& p) {
    std::vector<Interval> out;
    if (p.degree() < 1) return out;
    QPoly f = squarefree_part(p);
    auto seq = sturm_sequence(f);
    Rational b = root_bound(f);
    isolate(f, seq, -b, b, sign_variations(seq, -b), sign_variations(seq, b), out);
    return out;
}

Interval refine_root(const QPoly& p, Interval iv, const Rational& eps) {
    if (iv.lo == iv.hi) return iv;
    int slo = sign_at(p, iv.lo);
    if (slo == 0) return Interval(iv.lo);
    if (sign_at(p, iv.hi) == 0) return Interval(iv.hi);
    while (iv.width() > eps) {
        Rational m = iv.mid();
        int sm = sign_at(p, m);
        if (sm == 0) return Interval(m);
        if (sm == slo)
            iv.lo = m;
        else
            iv.hi = m;
    }
    return iv;
}

Interval sqrt_enclosure(const Interval& x, const Rational& eps) {
    if (x.hi.sign() < 0) throw ArithmeticError("square root of a negative interval");
    unsigned long k = 8;
    while (Rational(1, ipow(Integer(2), k)) > eps) k += 8;
    Integer scale = ipow(Integer(4), k), unit = ipow(Integer(2), k);
    Integer lo = 0, hi;
    if (x.lo.sign() > 0) {
        Integer t = floor(x.lo * Rational(scale));
        mpz_sqrt(lo.get_mpz_t(), t.get_mpz_t());
    }
    Integer t = ceil(x.hi * Rational(scale));
    mpz_sqrt(hi.get_mpz_t(), t.get_mpz_t());
    if (hi * hi < t) hi += 1;
    return {Rational(lo, unit), Rational(hi, unit)};
}

}  // namespace vinbergkit

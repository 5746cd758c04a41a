#pragma once

#include <vector>

#include "vinbergkit/polynomial.hpp"

namespace vinbergkit {

/// Closed rational interval [lo, hi]; lo == hi for an exactly known value.
struct Interval {
    Rational lo, hi;

    Interval() = default;
    Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}
    explicit Interval(const Rational& v) : lo(v), hi(v) {}

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / Rational(2); }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
    /// -1/+1 if the interval lies strictly on one side of zero, else 0.
    int certain_sign() const { return lo.sign() > 0 ? 1 : (hi.sign() < 0 ? -1 : 0); }
    bool overlaps(const Interval& o) const { return !(hi < o.lo || o.hi < lo); }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(const Rational& s, const Interval& a);

/// Enclosure of p over x by interval Horner evaluation.
Interval evaluate(const QPoly& p, const Interval& x);

/// Exact sign of p(x).
int sign_at(const QPoly& p, const Rational& x);

/// Sturm sequence p, p', -rem, ... with positive rescaling of each term.
std::vector<QPoly> sturm_sequence(const QPoly& p);

/// Sign variations of the sequence at x (zeros skipped).
int sign_variations(const std::vector<QPoly>& seq, const Rational& x);

/// Number of distinct real roots of p.
int count_real_roots(const QPoly& p);

/// Number of distinct real roots of p in (a, b].
int count_roots(const std::vector<QPoly>& sturm, const Rational& a, const Rational& b);

/// Upper bound on the absolute value of every complex root (power of two).
Rational root_bound(const QPoly& p);

/// Isolating intervals of the distinct real roots of p, ascending. Each
/// interval has dyadic endpoints that are not roots and contains one root, or
/// is a point interval at a rational root.
std::vector<Interval> isolate_real_roots(const QPoly& p);

/// Shrinks an isolating interval of a squarefree p to width <= eps.
Interval refine_root(const QPoly& p, Interval iv, const Rational& eps);

/// Enclosure of sqrt over a non-negative interval, widened by at most eps.
Interval sqrt_enclosure(const Interval& x, const Rational& eps);

}  // namespace vinbergkit

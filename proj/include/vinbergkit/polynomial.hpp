#pragma once

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include "vinbergkit/error.hpp"
#include "vinbergkit/rational.hpp"

namespace vinbergkit {

inline bool is_zero(const Rational& r) { return r.is_zero(); }

namespace detail {
template <typename T>
bool scalar_zero(const T& x) {
    return is_zero(x);
}
}  // namespace detail

/// Dense univariate polynomial, coefficients in ascending degree. The zero
/// polynomial has no coefficients and degree -1. Scalar must be a field for
/// division and gcd.
template <typename Scalar>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Scalar> c) : c_(c) { trim(); }
    explicit Polynomial(std::vector<Scalar> c) : c_(std::move(c)) { trim(); }
    static Polynomial constant(const Scalar& s) { return Polynomial(std::vector<Scalar>{s}); }
    static Polynomial monomial(const Scalar& s, int degree) {
        std::vector<Scalar> c(static_cast<size_t>(degree) + 1, Scalar(0));
        c.back() = s;
        return Polynomial(std::move(c));
    }
    /// The polynomial t.
    static Polynomial x() { return monomial(Scalar(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Scalar>& coeffs() const { return c_; }
    /// Coefficient of t^i (zero beyond the degree).
    Scalar operator[](int i) const {
        return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<size_t>(i)] : Scalar(0);
    }
    const Scalar& lead() const { return c_.back(); }

    template <typename X>
    X operator()(const X& x) const {
        X acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + X(*it);
        return acc;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a) {
        std::vector<Scalar> c;
        c.reserve(a.c_.size());
        for (const auto& v : a.c_) c.push_back(-v);
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::scalar_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(c));
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    friend Polynomial operator*(const Scalar& s, Polynomial p) {
        for (auto& v : p.c_) v = s * v;
        p.trim();
        return p;
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }

    std::string str(const std::string& var = "t") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            Scalar v = c_[static_cast<size_t>(i)];
            if (detail::scalar_zero(v)) continue;
            bool negative = false;
            if constexpr (std::is_same_v<Scalar, Rational>) negative = v.sign() < 0;
            if (negative) v = -v;
            if (first)
                os << (negative ? "-" : "");
            else
                os << (negative ? " - " : " + ");
            first = false;
            if (i == 0) {
                os << v;
                continue;
            }
            if (!(v == Scalar(1))) {
                if constexpr (std::is_same_v<Scalar, Rational>)
                    os << v << "*";
                else
                    os << "(" << v << ")*";
            }
            os << var;
            if (i > 1) os << "^" << i;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && detail::scalar_zero(c_.back())) c_.pop_back();
    }
    std::vector<Scalar> c_;
};

using QPoly = Polynomial<Rational>;

template <typename Scalar>
Polynomial<Scalar> derivative(const Polynomial<Scalar>& p) {
    if (p.degree() < 1) return {};
    std::vector<Scalar> c;
    for (int i = 1; i <= p.degree(); ++i) c.push_back(Scalar(i) * p[i]);
    return Polynomial<Scalar>(std::move(c));
}

template <typename Scalar>
Polynomial<Scalar> monic(const Polynomial<Scalar>& p) {
    if (p.is_zero()) return p;
    Scalar inv = Scalar(1) / p.lead();
    return inv * p;
}

/// Euclidean division a = q*b + r with deg r < deg b.
template <typename Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>> divmod(const Polynomial<Scalar>& a,
                                                         const Polynomial<Scalar>& b) {
    if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
    std::vector<Scalar> r = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {Polynomial<Scalar>{}, a};
    std::vector<Scalar> q(static_cast<size_t>(a.degree() - db + 1), Scalar(0));
    Scalar inv = Scalar(1) / b.lead();
    for (int i = a.degree(); i >= db; --i) {
        const Scalar& top = r[static_cast<size_t>(i)];
        if (detail::scalar_zero(top)) continue;
        Scalar f = top * inv;
        q[static_cast<size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j)
            r[static_cast<size_t>(i - db + j)] = r[static_cast<size_t>(i - db + j)] - f * b[j];
    }
    r.resize(static_cast<size_t>(db));
    return {Polynomial<Scalar>(std::move(q)), Polynomial<Scalar>(std::move(r))};
}

template <typename Scalar>
Polynomial<Scalar> operator%(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b) {
    return divmod(a, b).second;
}

/// Exact quotient; throws if b does not divide a.
template <typename Scalar>
Polynomial<Scalar> exact_div(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw ArithmeticError("polynomial division leaves a remainder");
    return q;
}

/// Monic gcd (zero if both are zero).
template <typename Scalar>
Polynomial<Scalar> gcd(Polynomial<Scalar> a, Polynomial<Scalar> b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

/// Returns (g, s, t) with s*a + t*b = g, g monic.
template <typename Scalar>
std::tuple<Polynomial<Scalar>, Polynomial<Scalar>, Polynomial<Scalar>> ext_gcd(
    Polynomial<Scalar> a, Polynomial<Scalar> b) {
    using P = Polynomial<Scalar>;
    P s0 = P::constant(Scalar(1)), s1, t0, t1 = P::constant(Scalar(1));
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
        P s2 = s0 - q * s1;
        P t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (a.is_zero()) return {a, s0, t0};
    Scalar inv = Scalar(1) / a.lead();
    return {inv * a, inv * s0, inv * t0};
}

template <typename Scalar>
Polynomial<Scalar> squarefree_part(const Polynomial<Scalar>& p) {
    if (p.degree() < 1) return monic(p);
    return monic(exact_div(p, gcd(p, derivative(p))));
}

template <typename Scalar>
bool is_squarefree(const Polynomial<Scalar>& p) {
    return gcd(p, derivative(p)).degree() == 0;
}

/// p(t + c).
template <typename Scalar>
Polynomial<Scalar> taylor_shift(const Polynomial<Scalar>& p, const Scalar& c) {
    Polynomial<Scalar> lin{c, Scalar(1)};
    Polynomial<Scalar> acc;
    for (int i = p.degree(); i >= 0; --i) acc = acc * lin + Polynomial<Scalar>::constant(p[i]);
    return acc;
}

/// p(c * t).
template <typename Scalar>
Polynomial<Scalar> scale_variable(const Polynomial<Scalar>& p, const Scalar& c) {
    std::vector<Scalar> out;
    Scalar f(1);
    for (int i = 0; i <= p.degree(); ++i) {
        out.push_back(p[i] * f);
        f = f * c;
    }
    return Polynomial<Scalar>(std::move(out));
}

/// Composition p(q(t)).
template <typename Scalar>
Polynomial<Scalar> compose(const Polynomial<Scalar>& p, const Polynomial<Scalar>& q) {
    Polynomial<Scalar> acc;
    for (int i = p.degree(); i >= 0; --i) acc = acc * q + Polynomial<Scalar>::constant(p[i]);
    return acc;
}

template <typename Scalar>
Polynomial<Scalar> pow(const Polynomial<Scalar>& p, int e) {
    Polynomial<Scalar> r = Polynomial<Scalar>::constant(Scalar(1));
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

// ---------------------------------------------------------------------------
// Integer/rational helpers on QPoly
// ---------------------------------------------------------------------------

/// Scales p by a positive rational so that coefficients are coprime integers
/// with positive leading coefficient.
QPoly primitive_part(const QPoly& p);
std::vector<Integer> integer_coeffs(const QPoly& primitive);
QPoly from_integers(const std::vector<Integer>& c);

}  // namespace vinbergkit

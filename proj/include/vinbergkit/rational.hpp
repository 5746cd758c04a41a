#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vinbergkit {

using Integer = mpz_class;

/// Exact rational scalar. Thin value wrapper over mpq_class so that it can be
/// used as an Eigen scalar (gmpxx expression templates do not mix with Eigen).
class Rational {
public:
    Rational() = default;
    Rational(int v) : v_(v) {}
    Rational(long v) : v_(v) {}
    Rational(long long v) : v_(Integer(std::to_string(v))) {}
    Rational(unsigned long v) : v_(v) {}
    Rational(const Integer& v) : v_(v) {}
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    /// Parses "p", "-p/q".
    static Rational parse(std::string_view text);

    const mpq_class& raw() const { return v_; }
    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    double to_double() const { return v_.get_d(); }
    std::string str() const { return v_.get_str(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

Rational abs(const Rational& r);
Rational pow(const Rational& base, long exponent);
Integer floor(const Rational& r);
Integer ceil(const Rational& r);

// Eigen's generic code looks these up by ADL.
inline const Rational& conj(const Rational& x) { return x; }
inline const Rational& real(const Rational& x) { return x; }
inline Rational imag(const Rational&) { return Rational(0); }
inline Rational abs2(const Rational& x) { return x * x; }

// ---------------------------------------------------------------------------
// Integer helpers
// ---------------------------------------------------------------------------

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer ipow(const Integer& base, unsigned long exponent);

/// Exact p-adic valuation of a nonzero integer.
int valuation(const Integer& n, const Integer& p);
/// v_p of a nonzero rational.
int valuation(const Rational& r, const Integer& p);

bool is_probable_prime(const Integer& n);
/// Prime factorization of |n| (n != 0); primes ascending with multiplicities.
std::map<Integer, int> factor_integer(const Integer& n);
/// Squarefree part keeping sign: n = s * m^2 with s squarefree.
Integer squarefree_part(const Integer& n);
/// Canonical squarefree integer representing r modulo (Q*)^2.
Integer squarefree_class(const Rational& r);
/// Integer square root if n is a perfect square.
bool is_perfect_square(const Integer& n, Integer* root = nullptr);
bool is_rational_square(const Rational& r, Rational* root = nullptr);

/// Kronecker symbol (a|n) for n > 0.
int kronecker(const Integer& a, const Integer& n);

/// Reduce r modulo a prime power m, requiring the denominator to be a unit mod m.
Integer mod_reduce(const Rational& r, const Integer& m);

long euler_phi(long m);

}  // namespace vinbergkit

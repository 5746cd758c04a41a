#pragma once

#include <compare>
#include <string>
#include <vector>

#include "vinbergkit/algnum.hpp"

namespace vinbergkit {

/// u + v*sqrt(d) with d squarefree; d = 1 stands for Q (v = 0).
struct QuadElem {
    Integer d = 1;
    Rational u, v;

    QuadElem() = default;
    QuadElem(Integer d_, Rational u_, Rational v_ = Rational(0));

    bool is_zero() const { return u.is_zero() && v.is_zero(); }
    bool is_rational() const { return v.is_zero(); }
    Rational norm() const { return u * u - Rational(d) * v * v; }
    Rational trace() const { return Rational(2) * u; }
    QuadElem conjugate() const { return {d, u, -v}; }
    QuadElem inverse() const;
    /// Sign of u + s*v*sqrt(d) for s = +1 or -1 (real d only).
    int sign(int s = 1) const;
    std::string str() const;

    friend QuadElem operator+(const QuadElem& a, const QuadElem& b);
    friend QuadElem operator-(const QuadElem& a, const QuadElem& b);
    friend QuadElem operator-(const QuadElem& a);
    friend QuadElem operator*(const QuadElem& a, const QuadElem& b);
    friend QuadElem operator/(const QuadElem& a, const QuadElem& b);
    friend bool operator==(const QuadElem& a, const QuadElem& b);
};

QuadElem pow(const QuadElem& a, long e);

/// Q(sqrt(d)); d = 1 is Q itself.
class QuadraticField {
public:
    explicit QuadraticField(Integer d = 1);
    /// Throws ArithmeticError for fields of degree > 2.
    static QuadraticField of(const FieldPtr& f);

    const Integer& d() const { return d_; }
    bool is_rationals() const { return d_ == 1; }
    bool is_real() const { return d_ > 0; }
    /// Ring of integers is Z[(1+sqrt d)/2] rather than Z[sqrt d].
    bool omega_half() const;
    Integer discriminant() const;
    int degree() const { return is_rationals() ? 1 : 2; }

    QuadElem element(const Rational& u, const Rational& v = Rational(0)) const { return {d_, u, v}; }
    QuadElem from(const AlgebraicNumber& a) const;
    AlgebraicNumber to_algebraic(const QuadElem& x, const FieldPtr& target) const;
    bool is_integral(const QuadElem& x) const;
    std::string name() const;

    friend bool operator==(const QuadraticField&, const QuadraticField&) = default;

private:
    Integer d_;
};

/// A place of Q or of a quadratic field.
struct Place {
    enum class Kind { Real, Rational, Split, Inert, Ramified };
    Kind kind = Kind::Rational;
    Integer p = 0;
    /// Real: image sign of sqrt(d). Split: residue of the integral generator w.
    int sign = 1;
    Integer residue = 0;

    bool is_real() const { return kind == Kind::Real; }
    bool is_dyadic() const { return kind != Kind::Real && p == 2; }
    /// Ramification index over Q.
    int e() const { return kind == Kind::Ramified ? 2 : 1; }
    /// Human-readable ideal or place name.
    std::string label(const QuadraticField& f) const;
    std::string kind_name() const;

    friend bool operator==(const Place& a, const Place& b) {
        return a.kind == b.kind && a.p == b.p && a.sign == b.sign && a.residue == b.residue;
    }
    friend std::strong_ordering operator<=>(const Place& a, const Place& b);
};

std::vector<Place> real_places(const QuadraticField& f);
/// Primes of the ring of integers above the rational prime p.
std::vector<Place> places_above(const QuadraticField& f, const Integer& p);
/// Rational primes dividing a numerator or denominator of the norm or of a coordinate.
std::vector<Integer> support_primes(const QuadElem& x);
long valuation(const QuadElem& x, const Place& place);

/// Image of x in Q_p at a split place: x = p^val * unit, unit reduced mod p^precision.
struct PAdicApprox {
    long val = 0;
    Integer unit;
};
PAdicApprox padic_image(const QuadElem& x, const Place& place, long precision);

/// Square root of a modulo an odd prime p, if a is a square.
bool sqrt_mod_prime(const Integer& a, const Integer& p, Integer* root);

}  // namespace vinbergkit

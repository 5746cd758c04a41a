#pragma once

#include <Eigen/Core>

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "vinbergkit/polynomial.hpp"
#include "vinbergkit/real_roots.hpp"

namespace vinbergkit {

class NumberField;
class AlgebraicNumber;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Largest field degree produced by adjunctions and composita.
inline constexpr int kMaxFieldDegree = 64;

/// A real embedding: sends the generator to real root number `root_index`
/// (ascending order) of the minimal polynomial.
struct Embedding {
    FieldPtr field;
    int root_index = 0;
    bool is_identity() const;
};

/// Q(theta) for a real root theta of a monic irreducible integral polynomial.
/// Immutable after construction; root enclosures are refined lazily under a
/// lock.
class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    /// The degree-1 field with theta = 0.
    static FieldPtr rationals();
    /// minpoly must be monic, integral and irreducible; root_index selects
    /// among its real roots in ascending order.
    static FieldPtr create(const QPoly& minpoly, int root_index);

    int degree() const { return minpoly_.degree(); }
    bool is_rationals() const { return degree() == 1; }
    const QPoly& minpoly() const { return minpoly_; }
    int real_root_count() const { return static_cast<int>(roots_.size()); }
    int designated_root() const { return designated_; }
    bool is_totally_real() const { return real_root_count() == degree(); }

    /// Enclosure of width <= eps of real root number `index` (-1: designated).
    Interval root_enclosure(const Rational& eps, int index = -1) const;

    std::vector<Embedding> embeddings() const;
    AlgebraicNumber generator() const;
    AlgebraicNumber from_coords(std::vector<Rational> coords) const;

    /// Coordinates of theta^k for k < 2*degree - 1.
    const std::vector<Rational>& power(int k) const { return powers_[static_cast<size_t>(k)]; }

    /// Same minimal polynomial and designated root.
    bool identical(const NumberField& other) const;

    std::string str() const;

private:
    NumberField(QPoly minpoly, std::vector<Interval> roots, int designated);

    QPoly minpoly_;
    std::vector<Interval> roots_;
    int designated_ = 0;
    std::vector<std::vector<Rational>> powers_;
    mutable std::mutex cache_mutex_;
    mutable std::vector<Interval> cache_;
};

/// Element of a number field in the power basis of its generator.
class AlgebraicNumber {
public:
    AlgebraicNumber();
    AlgebraicNumber(int v);
    AlgebraicNumber(long v);
    AlgebraicNumber(const Integer& v);
    AlgebraicNumber(const Rational& v);
    AlgebraicNumber(FieldPtr field, std::vector<Rational> coords);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Throws if the element is not rational.
    Rational to_rational() const;

    /// Sign under the designated embedding, or under real root `root_index`.
    int sign(int root_index = -1) const;
    int sign(const Embedding& e) const { return sign(e.root_index); }
    Interval enclosure(const Rational& eps, int root_index = -1) const;
    double to_double(int root_index = -1) const;

    AlgebraicNumber inverse() const;

    AlgebraicNumber& operator+=(const AlgebraicNumber& o);
    AlgebraicNumber& operator-=(const AlgebraicNumber& o);
    AlgebraicNumber& operator*=(const AlgebraicNumber& o);
    AlgebraicNumber& operator/=(const AlgebraicNumber& o);
    friend AlgebraicNumber operator+(AlgebraicNumber a, const AlgebraicNumber& b) { return a += b; }
    friend AlgebraicNumber operator-(AlgebraicNumber a, const AlgebraicNumber& b) { return a -= b; }
    friend AlgebraicNumber operator*(AlgebraicNumber a, const AlgebraicNumber& b) { return a *= b; }
    friend AlgebraicNumber operator/(AlgebraicNumber a, const AlgebraicNumber& b) { return a /= b; }
    friend AlgebraicNumber operator-(const AlgebraicNumber& a);

    friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend bool operator<(const AlgebraicNumber& a, const AlgebraicNumber& b) { return (a - b).sign() < 0; }
    friend bool operator>(const AlgebraicNumber& a, const AlgebraicNumber& b) { return b < a; }
    friend bool operator<=(const AlgebraicNumber& a, const AlgebraicNumber& b) { return !(b < a); }
    friend bool operator>=(const AlgebraicNumber& a, const AlgebraicNumber& b) { return !(a < b); }

    /// Polynomial in the generator `a`, or u + v*sqrt(d) in quadratic fields.
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const AlgebraicNumber& a);

private:
    FieldPtr field_;
    std::vector<Rational> c_;
};

inline bool is_zero(const AlgebraicNumber& a) { return a.is_zero(); }
AlgebraicNumber abs(const AlgebraicNumber& a);
AlgebraicNumber pow(const AlgebraicNumber& a, int e);

// Eigen's generic code looks these up by ADL.
inline const AlgebraicNumber& conj(const AlgebraicNumber& x) { return x; }
inline const AlgebraicNumber& real(const AlgebraicNumber& x) { return x; }
inline AlgebraicNumber imag(const AlgebraicNumber&) { return AlgebraicNumber(); }
inline AlgebraicNumber abs2(const AlgebraicNumber& x) { return x * x; }

using APoly = Polynomial<AlgebraicNumber>;

/// Supplies enclosures of a fixed real number of width <= eps.
using RealOracle = std::function<Interval(const Rational& eps)>;

struct Adjoined {
    FieldPtr field;
    AlgebraicNumber root;
};

FieldPtr field_of_rationals();

/// Field containing F and the real root of g (coefficients coercible into F)
/// described by the oracle. Returns F itself when the root already lies in F.
Adjoined adjoin_root(const FieldPtr& f, const APoly& g, const RealOracle& root);

/// Real root of a rational polynomial isolated by [lo, hi].
Adjoined adjoin_root(const QPoly& g, const Interval& isolating);

/// y with y^2 = x and the requested sign (+1/-1) under the designated embedding.
Adjoined adjoin_sqrt(const FieldPtr& f, const AlgebraicNumber& x, int sign = 1);
AlgebraicNumber sqrt(const AlgebraicNumber& x);

/// Smallest field containing both (as subfields of R); cached.
FieldPtr compositum(const FieldPtr& a, const FieldPtr& b);
/// Common field of a and b, reusing known inclusions before forming a compositum.
FieldPtr common_field(const FieldPtr& a, const FieldPtr& b);
FieldPtr common_field(const std::vector<AlgebraicNumber>& elements);

/// Re-expresses a in `target` via a known inclusion, if there is one.
std::optional<AlgebraicNumber> coerce(const AlgebraicNumber& a, const FieldPtr& target);
/// Re-expresses a in `target` if the real number a lies in target.
std::optional<AlgebraicNumber> express_in(const AlgebraicNumber& a, const FieldPtr& target);
/// coerce, falling back to express_in; throws ArithmeticError if a is not in target.
AlgebraicNumber to_field(const AlgebraicNumber& a, const FieldPtr& target);

/// Equality as subfields of R.
bool same_field(const FieldPtr& a, const FieldPtr& b);
/// Inclusion a subset of b as subfields of R.
bool is_subfield(const FieldPtr& a, const FieldPtr& b);

QPoly minimal_polynomial(const AlgebraicNumber& a);
bool is_algebraic_integer(const AlgebraicNumber& a);
/// Field norm down to Q.
Rational norm(const AlgebraicNumber& a);
Rational trace(const AlgebraicNumber& a);

/// A square root inside the element's own field, if one exists.
std::optional<AlgebraicNumber> is_square(const AlgebraicNumber& a);

struct Subfield {
    FieldPtr field;
    /// Generator of `field` as an element of the ambient field.
    AlgebraicNumber generator;
    /// Inputs re-expressed in `field`.
    std::vector<AlgebraicNumber> elements;
};

/// Smallest subfield of the common field containing every element.
Subfield subfield_generated(const std::vector<AlgebraicNumber>& elements);

bool is_totally_real(const FieldPtr& f);
std::vector<Embedding> embeddings(const FieldPtr& f);

/// Exact cos(pi/m), m >= 2, in Q(cos(pi/m)).
AlgebraicNumber cos_pi_over(long m);

/// Coordinates in Q(sqrt(d)) for an element of a field of degree <= 2:
/// value = u + v*sqrt(d) with d squarefree (d = 1 for Q).
struct QuadraticCoords {
    Integer d;
    Rational u, v;
};
QuadraticCoords quadratic_coords(const AlgebraicNumber& a);
/// Squarefree d with f = Q(sqrt(d)) for fields of degree <= 2.
Integer quadratic_discriminant_class(const FieldPtr& f);

/// Interval refinement starting precision in decimal digits.
int starting_precision_digits();

}  // namespace vinbergkit

namespace Eigen {

template <>
struct NumTraits<vinbergkit::Rational> : GenericNumTraits<vinbergkit::Rational> {
    using Real = vinbergkit::Rational;
    using NonInteger = vinbergkit::Rational;
    using Literal = vinbergkit::Rational;
    using Nested = vinbergkit::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 20,
        MulCost = 40
    };
    static Real epsilon() { return Real(0); }
    static Real dummy_precision() { return Real(0); }
    static int digits10() { return 0; }
};

template <>
struct NumTraits<vinbergkit::AlgebraicNumber> : GenericNumTraits<vinbergkit::AlgebraicNumber> {
    using Real = vinbergkit::AlgebraicNumber;
    using NonInteger = vinbergkit::AlgebraicNumber;
    using Literal = vinbergkit::AlgebraicNumber;
    using Nested = vinbergkit::AlgebraicNumber;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 50,
        AddCost = 100,
        MulCost = 400
    };
    static Real epsilon() { return Real(0); }
    static Real dummy_precision() { return Real(0); }
    static int digits10() { return 0; }
};

}  // namespace Eigen

#pragma once

#include <string>
#include <vector>

#include "vinbergkit/quadratic.hpp"
#include "vinbergkit/vform.hpp"

namespace vinbergkit {

/// Hilbert symbol (a, b)_p over Q; p = 0 is the real place.
int hilbert_symbol(const Rational& a, const Rational& b, const Integer& p);

/// Symbol over Q_p for a = p^alpha u, b = p^beta v with p-adic units u, v
/// given modulo p (odd p) or modulo 8 (p = 2).
int hilbert_symbol_padic(long alpha, const Integer& u, long beta, const Integer& v, const Integer& p);

/// Hilbert symbol at a place of Q or of a quadratic field.
int hilbert_symbol(const QuadElem& a, const QuadElem& b, const Place& place, const QuadraticField& f);

/// Every place where a symbol built from these elements can be nontrivial.
std::vector<Place> candidate_places(const QuadraticField& f, const std::vector<QuadElem>& elements);

/// A 2-torsion Brauer class represented by its ramification set.
struct BrauerClass {
    QuadraticField field;
    std::vector<Place> ram;

    bool trivial() const { return ram.empty(); }
    std::vector<std::string> labels() const;
    std::string str() const;
    friend bool operator==(const BrauerClass&, const BrauerClass&) = default;
};

/// Product of classes: symmetric difference of ramification sets.
BrauerClass operator*(const BrauerClass& a, const BrauerClass& b);

BrauerClass quaternion_class(const QuadraticField& f, const QuadElem& a, const QuadElem& b);
/// s(q) = prod_{i<j} (a_i, a_j).
BrauerClass hasse_invariant(const QuadraticField& f, const std::vector<QuadElem>& diagonal);
/// Witt invariant from s(q) by the dimension-mod-8 table.
BrauerClass witt_invariant(const QuadraticField& f, const std::vector<QuadElem>& diagonal);
/// B tensor Q(sqrt(delta)) for a class B over Q.
BrauerClass extend_scalars(const BrauerClass& b, const Integer& delta);

std::vector<QuadElem> to_quadratic(const QuadraticField& f, const std::vector<AlgebraicNumber>& xs);

struct SimilarityVerdict {
    enum class Status { Similar, NotSimilar, Inconclusive, Unsupported };
    Status status = Status::Inconclusive;
    /// Failing condition or the branch taken.
    std::string reason;
    bool det_class_differs = false;
    std::string details;

    std::string status_name() const;
};

/// Similarity of two Vinberg forms over a common field of degree <= 2.
/// `quasi_arithmetic` says whether both groups are quasi-arithmetic.
SimilarityVerdict similarity_decision(const VinbergForm& q1, const VinbergForm& q2, bool quasi_arithmetic);

}  // namespace vinbergkit

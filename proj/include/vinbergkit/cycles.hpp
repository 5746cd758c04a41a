#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vinbergkit/coxgraph.hpp"
#include "vinbergkit/quadratic.hpp"

namespace vinbergkit {

inline constexpr std::size_t kDefaultCycleCap = 1000000;

using Cycle = std::vector<int>;

/// Simple cycles of length >= 2 on the nonzero off-diagonal entries, each once
/// up to rotation and reversal: smallest vertex first, then the smaller of its
/// two neighbours. Sorted lexicographically.
std::vector<Cycle> enumerate_simple_cycles(const GramMatrix& gm, std::size_t cap = kDefaultCycleCap);

/// 2^l * g(i1,i2) * ... * g(il,i1); a 1-cycle gives 2.
AlgebraicNumber cycle_value(const GramMatrix& gm, const Cycle& cycle);

struct CycleValue {
    Cycle indices;
    /// In the entry field.
    AlgebraicNumber value;
    /// Re-expressed in the Vinberg field.
    AlgebraicNumber in_field;
};

struct VinbergField {
    FieldPtr field;
    /// Primitive element of the Vinberg field inside the entry field.
    AlgebraicNumber generator;
    std::vector<CycleValue> cycles;
};

VinbergField vinberg_field(const GramMatrix& gm, std::size_t cap = kDefaultCycleCap);

/// Ring of integers of K with the cycle values adjoined.
struct VinbergRing {
    enum class Kind { Rational, Quadratic, Opaque };
    Kind kind = Kind::Rational;
    FieldPtr field;
    /// Rational: Z[1/n] with n squarefree (1 for Z).
    Integer inverted = 1;
    /// Quadratic: prime ideals where some generator has negative valuation.
    QuadraticField quad;
    std::vector<Place> inverted_primes;
    /// Opaque: the non-integral generators.
    std::vector<AlgebraicNumber> generators;

    bool canonical() const { return kind != Kind::Opaque || generators.empty(); }
    std::string str() const;
};

VinbergRing ring_from_values(const FieldPtr& K, const std::vector<AlgebraicNumber>& values);
VinbergRing vinberg_ring(const VinbergField& vf);

enum class RingComparison { Equal, Different, Unknown };
RingComparison compare_rings(const VinbergRing& a, const VinbergRing& b);

/// Recomputes the ring with every closed walk of length <= max_length added.
struct WalkCheck {
    int max_length = 0;
    std::size_t walk_classes = 0;
    bool consistent = true;
};
WalkCheck closed_walk_check(const GramMatrix& gm, const VinbergField& vf, const VinbergRing& ring, int max_length);

}  // namespace vinbergkit

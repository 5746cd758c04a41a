#pragma once

#include <string>
#include <vector>

#include "vinbergkit/cycles.hpp"

namespace vinbergkit {

enum class Arithmeticity { Arithmetic, QuasiArithmetic, NqArithmetic };

std::string to_string(Arithmeticity a);

struct ArithWitness {
    /// "not-totally-real", "not-psd", "non-integral-cycle", "psd", "integral"
    std::string code;
    std::string message;
    int embedding = -1;
    int coefficient = -1;
    Cycle cycle;
};

struct ArithClass {
    Arithmeticity value = Arithmeticity::NqArithmetic;
    std::vector<ArithWitness> witnesses;
    /// Embeddings of the entry field that move the Vinberg field.
    std::vector<int> conjugate_embeddings;

    bool quasi_arithmetic() const { return value != Arithmeticity::NqArithmetic; }
};

/// Vinberg's criterion.
ArithClass classify(const GramMatrix& gm, const VinbergField& vf);

/// True when the embedding with this root index fixes x (an element of its field).
bool embedding_fixes(const AlgebraicNumber& x, int root_index);

struct Advisory {
    std::string code;
    std::string message;
};

/// m >= 2 with phi(m) <= 2d.
std::vector<long> admissible_m(int d);

struct TotientViolation {
    int i = 0, j = 0;
    long m = 0;
    long phi = 0;
};
std::vector<TotientViolation> totient_bound_check(const CoxeterGraph& g, int d);

/// Vertex sets of order 3..5 spanning a compact hyperbolic simplex: only
/// angle edges, signature (k-1, 1) and every proper subgraph spherical.
std::vector<std::vector<int>> lanner_subgraphs(const CoxeterGraph& g, const GramMatrix& gm);

/// Fields allowed for cocompact quasi-arithmetic groups with a Lanner subgraph of order >= 3.
std::vector<FieldPtr> lanner_field_list();

std::vector<Advisory> field_watchlist(const CoxeterGraph& g, const GramMatrix& gm, const VinbergField& vf,
                                      const ArithClass& cls);

}  // namespace vinbergkit

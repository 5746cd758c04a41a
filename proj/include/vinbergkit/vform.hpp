#pragma once

#include <vector>

#include "vinbergkit/cycles.hpp"

namespace vinbergkit {

/// Vertex sequence starting at the base vertex, consecutive vertices joined
/// by nonzero Gram entries. The vector is 2^k g(i0,i1)...g(ik-1,ik) e_ik for
/// k >= 1 and 2 e_i0 for the bare base.
using VinbergPath = std::vector<int>;

/// Coefficient of e_last in the vector of a path, in the entry field.
AlgebraicNumber path_coefficient(const GramMatrix& gm, const VinbergPath& path);

/// <v_p, v_q> re-expressed in the Vinberg field; InternalError if it is not there.
AlgebraicNumber inner_product(const GramMatrix& gm, const VinbergField& vf, const VinbergPath& p,
                              const VinbergPath& q);

/// Simple paths from `base`, shortest first, lexicographic within a length.
std::vector<VinbergPath> candidate_paths(const GramMatrix& gm, int base, int max_length);

/// Keeps each candidate whose vector is independent of the kept ones (rank of
/// the images under G), stopping at n + 1. Throws ValidationError when fewer
/// are found.
std::vector<VinbergPath> select_basis(const GramMatrix& gm, const std::vector<VinbergPath>& candidates);
std::vector<VinbergPath> select_basis(const GramMatrix& gm, int base = 0);

struct VinbergForm {
    FieldPtr field;
    int dim = 0;
    int base = 0;
    std::vector<VinbergPath> basis;
    AMatrix matrix;
    Diagonalization<AlgebraicNumber> diagonalization;
    /// Product of the diagonal entries.
    AlgebraicNumber det;
    AlgebraicNumber det_class;
    Signature signature;

    const std::vector<AlgebraicNumber>& diagonal() const { return diagonalization.diagonal; }
};

VinbergForm vinberg_form(const GramMatrix& gm, const VinbergField& vf, const std::vector<VinbergPath>& basis);
VinbergForm vinberg_form(const GramMatrix& gm, const VinbergField& vf, int base = 0);

/// Canonical representative of x modulo squares: squarefree integer over Q,
/// content-reduced integral element otherwise.
AlgebraicNumber square_class_representative(const AlgebraicNumber& x);
bool same_square_class(const AlgebraicNumber& a, const AlgebraicNumber& b);

/// (-1)^(n(n+1)/2) det.
AlgebraicNumber discriminant(const AlgebraicNumber& det, int n);

}  // namespace vinbergkit

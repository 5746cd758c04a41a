#pragma once

#include <optional>
#include <vector>

#include "vinbergkit/coxgraph.hpp"
#include "vinbergkit/real_roots.hpp"

namespace vinbergkit {

struct CharPolyRecord {
    /// Monic, over the entry field.
    APoly poly;
    /// Field generated by the coefficients, with the coefficients in it.
    Subfield field;
};

CharPolyRecord char_poly_gram(const GramMatrix& gm);

/// rho(s_i) v_j = v_j - 2 G_ij v_i in the basis v_1..v_N.
std::vector<AMatrix> tits_matrices(const GramMatrix& gm);

/// Permutation of 0..N-1; C = s_{order[0]} ... s_{order[N-1]}.
using CoxeterOrder = std::vector<int>;

AMatrix coxeter_transformation(const GramMatrix& gm, const CoxeterOrder& order);

/// U + U^T = 2G and -U^{-1} U^T = C_T, both in the basis reordered by `order`.
bool check_U_identity(const GramMatrix& gm, const CoxeterOrder& order);

struct CoxeterCharPoly {
    CoxeterOrder order;
    APoly chi_T;
    /// chi_T divided by (t - 1)^(N - n - 1).
    APoly chi_C;
    Subfield field;
    int radical = 0;
    bool palindromic = false;
    /// Distinct real roots of chi_T greater than 1.
    int roots_above_one = 0;
    /// Enclosure of the largest real eigenvalue when it exceeds 1.
    std::optional<Interval> lambda;
};

CoxeterCharPoly coxeter_char_poly(const GramMatrix& gm, const CoxeterOrder& order);

/// a_j = a_{d-j} (sign = +1) or a_j = -a_{d-j} (sign = -1).
bool is_palindromic(const APoly& p, int sign);

/// Distinct real roots in (a, infinity); p(a) may vanish.
int count_roots_above(const APoly& p, const Rational& a);

}  // namespace vinbergkit

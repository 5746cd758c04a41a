#pragma once

#include <vector>

#include "vinbergkit/polynomial.hpp"

namespace vinbergkit {

/// Distinct monic irreducible factors over Q of a nonzero polynomial
/// (multiplicities dropped), sorted by degree then coefficients.
std::vector<QPoly> irreducible_factors(const QPoly& f);

bool is_irreducible(const QPoly& f);

}  // namespace vinbergkit

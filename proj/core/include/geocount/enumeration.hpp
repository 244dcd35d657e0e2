#pragma once

#include <optional>
#include <vector>

#include "geocount/linalg.hpp"
#include "geocount/smith.hpp"

namespace geocount {

// All integer coefficient vectors n with
//     |center + basis * n|^2_gram  <=  radius_squared
// (strict: < instead of <=), sorted lexicographically.  basis columns are
// the lattice generators and must be independent (InvalidInput otherwise);
// gram must be symmetric positive definite; radius_squared must be >= 0.
//
// Exact Fincke-Pohst style search: with A = B^T G B = L D L^T the form
// decomposes as a sum of d_i * y_i^2 around the real minimizer, so each
// level admits a finite integer range found by scanning outward from the
// nearest integer.  All comparisons are rational, nothing is rounded.
std::vector<IntVector> enumerate_lattice_points_in_ball(const RationalMatrix& basis,
                                                        const RationalMatrix& gram,
                                                        const RationalVector& center,
                                                        const Rational& radius_squared,
                                                        bool strict = false);

// Integer coordinates of v in the given basis (columns independent), or
// std::nullopt when v is not an integer combination.  Throws InvalidInput
// when the columns are dependent.
std::optional<IntVector> solve_in_lattice(const RationalMatrix& basis, const RationalVector& v);

}  // namespace geocount

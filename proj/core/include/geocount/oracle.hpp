#pragma once

#include <string>
#include <vector>

#include "geocount/linalg.hpp"

namespace geocount::oracle {

// Floating point reference models for a handful of spaces, built directly
// from classical embeddings: the unit sphere and its antipodal quotient in
// R^3, the two-plane grassmannian of R^4 as projection matrices, and its
// oriented double cover as unit decomposable 2-vectors.  Nothing in the
// exact engine depends on this header; tests use it as an independent
// check.  Inputs are in the same scaled units as the engine (one unit of
// flat coordinate is an arc of pi).

inline constexpr double kDistanceTolerance = 1e-9;   // embedded point matching
inline constexpr double kSingularValueTolerance = 1e-5;  // jacobian nullity cut
inline constexpr double kFiniteDifferenceStep = 1e-6;

bool supports(const std::string& tag);

// Coordinate counts of the embedded image and of the tangent model.
std::size_t ambient_dimension(const std::string& tag);
std::size_t tangent_dimension(const std::string& tag);

// Image of the flat vector h (length 1 or 2 by tag) under the exponential
// at the base point.
std::vector<double> numeric_exp(const std::string& tag, const RationalVector& h);

// Image of an arbitrary tangent vector (tangent_dimension coordinates).
std::vector<double> numeric_exp_tangent(const std::string& tag, const std::vector<double>& x);

// Distance between embedded images, respecting the model's identifications
// (the projective plane compares both lifts).
double numeric_distance(const std::string& tag, const std::vector<double>& a,
                        const std::vector<double>& b);

// Nullity of the differential of the exponential at the flat point h,
// counted two independent ways: a trigonometric zero count over the model's
// root values, and the number of vanishing singular values of a central
// finite difference jacobian of the embedding.  Throws
// InternalInvariantViolation when the two disagree.
std::size_t numeric_index(const std::string& tag, const RationalVector& h);

}  // namespace geocount::oracle

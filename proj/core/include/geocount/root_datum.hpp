#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "geocount/linalg.hpp"
#include "geocount/smith.hpp"

namespace geocount {

// One restricted root, represented by the vector H_a dual to the root
// functional: a(h) = <H_a, h> in the gram form.  multiplicity is the
// dimension of the corresponding joint eigenspace.
struct Root {
    RationalVector covector;
    int multiplicity = 1;

    friend bool operator==(const Root& a, const Root& b) = default;
};

// A root hyperplane crossing of the scaled diagram: the positive root at
// root_index takes the integer value `level` on the queried vector.
struct DiagramCrossing {
    std::size_t root_index;
    Integer level;

    friend bool operator==(const DiagramCrossing& a, const DiagramCrossing& b) = default;
};

// Validated restricted root system on a rational inner product space.
// Convention used throughout the library: vectors are measured in units of
// pi, so "a(h) integer" is exactly the scaled diagram condition, and the
// translation lattices live in the same units.
//
// roots is closed under negation and stores the lex-sorted positive roots
// first, followed by their negatives in the same order; positive_indices is
// [0, roots.size()/2) and simple_indices selects the indecomposable
// positive roots.
struct RootDatum {
    std::size_t rank = 0;
    RationalMatrix gram;
    std::vector<Root> roots;
    std::vector<std::size_t> positive_indices;
    std::vector<std::size_t> simple_indices;

    std::size_t positive_count() const { return positive_indices.size(); }

    const Root& root(std::size_t i) const { return roots[i]; }

    // Index of the root with this covector; throws NotFound when absent.
    std::size_t root_index(const RationalVector& covector) const;
    bool has_root(const RationalVector& covector) const;

    Rational root_value(std::size_t root_index, const RationalVector& h) const;

    // H_a^vee = 2 H_a / <H_a, H_a>; the root takes value 2 on it.
    RationalVector coroot(std::size_t root_index) const;

    std::map<RationalVector, std::size_t> index_by_covector;
};

// Validates and canonicalizes a root system.  The input roots may list each
// opposite pair once (the negative is synthesized) or twice with matching
// multiplicities.  Checks: gram symmetric positive definite, covectors of
// length rank and nonzero, multiplicities >= 1, no duplicates, the
// crystallographic integrality of 2<a,b>/<a,a>, closure of the root set
// under every root reflection (multiplicities preserved), and that the
// indecomposable positive roots are independent and express every positive
// root as a nonnegative integer combination.  An empty root list is a valid
// torus datum.
RootDatum build_root_datum(std::size_t rank, const RationalMatrix& gram,
                           const std::vector<Root>& roots);

// Crossings of the scaled diagram at h: one entry per positive root with
// integer value, ordered by root index.
std::vector<DiagramCrossing> diagram_crossings(const RootDatum& datum, const RationalVector& h);

// True when h lies on no diagram hyperplane (no positive root takes an
// integer value on it).
bool is_regular(const RootDatum& datum, const RationalVector& h);

}  // namespace geocount

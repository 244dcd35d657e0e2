#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "geocount/enumeration.hpp"
#include "geocount/root_datum.hpp"
#include "geocount/smith.hpp"
#include "geocount/weyl.hpp"

namespace geocount {

// True when v is an integer combination of the basis columns.
bool lattice_contains(const RationalMatrix& basis, const RationalVector& v);

// True when both bases generate the same lattice (mutual containment).
bool lattices_equal(const RationalMatrix& a, const RationalMatrix& b);

// Canonical basis (columns) of the integer span of the given vectors.
// Deterministic: the column Hermite form of the generators scaled to a
// common denominator.  May have fewer columns than the ambient dimension.
RationalMatrix lattice_span_basis(const std::vector<RationalVector>& generators,
                                  std::size_t ambient_dim);

// Integer span of the coroots (the translations every geodesic loop
// certificate lives in).  Possibly of lower rank than the ambient space.
RationalMatrix fundamental_lattice(const RootDatum& datum);

// Largest translation lattice compatible with the diagram: all vectors on
// which every root takes integer values.  When the roots span, this is a
// genuine full-rank lattice (discrete = true).  When they do not (euclidean
// factor present), the vectors form a non-discrete group; discrete = false
// and basis holds the lattice of the semisimple slice (the span of the
// coroots) instead.
struct CentralLatticeResult {
    bool discrete = true;
    RationalMatrix basis;
};
CentralLatticeResult central_lattice(const RootDatum& datum);

// Checks that a candidate translation lattice works as the unit lattice of
// a space with this datum: full rank, contains every coroot, every root
// takes integer values on it, and the Weyl generators map it to itself.
struct UnitLatticeReport {
    bool ok = true;
    std::vector<std::string> failures;
};
UnitLatticeReport validate_unit_lattice(const RootDatum& datum, const WeylGroup& group,
                                        const RationalMatrix& basis);

// Presentation of the quotient (ambient lattice) / (sublattice), with a
// label for each ambient lattice element that is constant exactly on its
// coset: torsion coordinates (one per invariant factor, in [0, factor))
// followed by the free coordinates.
class QuotientPresentation {
public:
    QuotientPresentation(const RationalMatrix& ambient_basis, const RationalMatrix& sub_basis);

    const SmithDecomposition& decomposition() const { return decomposition_; }

    // x: integer coordinates in the ambient basis.
    IntVector label_of_coordinates(const IntVector& x) const;
    // v: ambient-space vector; must lie in the ambient lattice.
    IntVector label_of_vector(const RationalVector& v) const;

    std::size_t torsion_count() const { return decomposition_.invariant_factors.size(); }
    std::size_t free_count() const { return decomposition_.free_rank; }

private:
    RationalMatrix ambient_basis_;
    IntMatrix u_;
    std::vector<Integer> diag_;  // full diagonal of the normal form
    SmithDecomposition decomposition_;
};

// Quotient of the unit lattice by the coroot span.  The coroot span must be
// contained in the lattice (InvalidInput otherwise).
SmithDecomposition fundamental_group(const RootDatum& datum, const RationalMatrix& basis);

// Points of the coset h + L of minimal norm, sorted lexicographically.
struct ClosestVectors {
    Rational min_norm_squared;
    std::vector<RationalVector> representatives;
};
ClosestVectors closest_vectors(const RationalMatrix& basis, const RationalMatrix& gram,
                               const RationalVector& h);

// Points of h + L with the same norm as h, sorted lexicographically.
// Always contains h itself.
std::vector<RationalVector> focal_equivalents(const RationalMatrix& basis,
                                              const RationalMatrix& gram,
                                              const RationalVector& h);

// Position of h relative to the Dirichlet domain of L around the origin.
// Witnesses are the nonzero lattice vectors g with |h + g| <= |h|, sorted;
// interior has none, boundary has only ties, exterior has a strict improver.
enum class DirichletRegion { Interior, Boundary, Exterior };
struct DirichletClassification {
    DirichletRegion region = DirichletRegion::Interior;
    std::vector<RationalVector> witnesses;
};
DirichletClassification dirichlet_classify(const RationalMatrix& basis,
                                           const RationalMatrix& gram, const RationalVector& h);

const char* dirichlet_region_name(DirichletRegion region);

// Compares, on each sample, the Dirichlet classification against the coroot
// lattice with the alcove condition max |a(h)| vs 1 over positive roots.
// The coroot lattice must be full rank (InvalidInput otherwise).
struct AlcoveCheckReport {
    bool all_match = true;
    std::size_t checked = 0;
    std::vector<RationalVector> mismatches;
};
AlcoveCheckReport dirichlet_equals_alcove_check(const RootDatum& datum,
                                                const std::vector<RationalVector>& samples);

}  // namespace geocount

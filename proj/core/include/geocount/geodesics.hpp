#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geocount/lattice.hpp"
#include "geocount/root_datum.hpp"
#include "geocount/weyl.hpp"

namespace geocount {

// One family of geodesic segments from the base point to the target: a full
// orbit of torus representatives under the subgroup of the Weyl group that
// moves the target vector by unit lattice translations.  All segments in
// the family have the same length and the same focal dimension.
//
// representative is the lexicographically smallest orbit point unless a
// caller pinned one explicitly; torus_intersection is the whole orbit,
// sorted; component_representatives picks the smallest point of each
// connected component (orbit of the parallel reflection subgroup);
// homotopy_label identifies the class of the loop obtained by following
// this family and returning through a fixed reference segment, as
// coordinates in the fundamental group presentation.
struct FocalOrbitDescriptor {
    RationalVector representative;
    Rational norm_squared;
    std::size_t dimension = 0;
    std::size_t component_count = 0;
    std::vector<RationalVector> component_representatives;
    std::vector<RationalVector> torus_intersection;
    IntVector homotopy_label;
};

enum class CutPosition { BeforeCut, CutPoint, PastCut };
enum class ConjugatePosition { BeforeFirstConjugate, FirstConjugate, PastFirstConjugate };

const char* cut_position_name(CutPosition p);
const char* conjugate_position_name(ConjugatePosition p);

// Status of the geodesic t -> exp(t h) at t = 1.
struct PointClassification {
    bool regular = true;
    CutPosition cut = CutPosition::BeforeCut;
    ConjugatePosition conjugate = ConjugatePosition::BeforeFirstConjugate;
    std::size_t index = 0;  // nullity of the exponential at h
};

struct SimplyConnectedReport {
    bool gamma_equals_gamma0 = false;
    bool pi1_trivial = false;
    bool alcove_checked = false;    // comparison runs only with a full rank coroot lattice
    AlcoveCheckReport alcove;       // Dirichlet region of the unit lattice vs the alcove
    bool consistent = false;
};

// A compact symmetric space presented by its infinitesimal data: validated
// root datum plus unit lattice, with the Weyl group and the fundamental
// group presentation computed once up front.  All vectors are measured in
// units of pi.
class Space {
public:
    Space(std::string name, RootDatum datum, RationalMatrix gamma_basis,
          std::string notes = "", std::uint64_t weyl_cap = 1000000);

    const std::string& name() const { return name_; }
    const std::string& notes() const { return notes_; }
    const RootDatum& datum() const { return datum_; }
    const WeylGroup& weyl() const { return weyl_; }
    const RationalMatrix& gamma() const { return gamma_; }
    const RationalMatrix& gamma0() const { return gamma0_; }
    const QuotientPresentation& pi1() const { return pi1_; }

    SmithDecomposition fundamental_group() const { return pi1_.decomposition(); }

    // The family through `rep`, which must differ from `base` by a unit
    // lattice vector (InvalidInput otherwise).  The descriptor keeps `rep`
    // as its representative.
    FocalOrbitDescriptor focal_orbit(const RationalVector& base, const RationalVector& rep) const;

    // Every family with squared length at most max_norm_squared, ordered by
    // (squared length, representative).
    std::vector<FocalOrbitDescriptor> enumerate_preimages(const RationalVector& target,
                                                          const Rational& max_norm_squared) const;

    // The shortest families only.  Labels are taken relative to the
    // smallest minimal vector, so the straight reference family gets the
    // zero label.
    std::vector<FocalOrbitDescriptor> minimal_geodesics(const RationalVector& target) const;

    PointClassification classify_point(const RationalVector& h) const;

    SimplyConnectedReport simply_connected_report() const;

private:
    static QuotientPresentation validated_presentation(const RootDatum& datum,
                                                       const WeylGroup& weyl,
                                                       const RationalMatrix& gamma,
                                                       const RationalMatrix& gamma0);

    FocalOrbitDescriptor orbit_from_points(const RationalVector& label_base,
                                           const std::vector<RationalVector>& orbit_points,
                                           const SubgroupDescriptor& wq,
                                           const SubgroupDescriptor& wq0) const;

    std::vector<FocalOrbitDescriptor> partition_into_orbits(
        const RationalVector& coset_base, const std::vector<RationalVector>& points) const;

    std::string name_;
    RootDatum datum_;
    RationalMatrix gamma_;
    std::string notes_;
    WeylGroup weyl_;
    RationalMatrix gamma0_;
    QuotientPresentation pi1_;
};

}  // namespace geocount

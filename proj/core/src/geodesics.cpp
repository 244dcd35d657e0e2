#include "geocount/geodesics.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "geocount/errors.hpp"

namespace geocount {

const char* cut_position_name(CutPosition p) {
    switch (p) {
        case CutPosition::BeforeCut: return "before_cut";
        case CutPosition::CutPoint: return "cut_point";
        case CutPosition::PastCut: return "past_cut";
    }
    return "unknown";
}

const char* conjugate_position_name(ConjugatePosition p) {
    switch (p) {
        case ConjugatePosition::BeforeFirstConjugate: return "before_first_conjugate";
        case ConjugatePosition::FirstConjugate: return "first_conjugate";
        case ConjugatePosition::PastFirstConjugate: return "past_first_conjugate";
    }
    return "unknown";
}

namespace {

std::string joined(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += "; ";
        out += p;
    }
    return out;
}

std::size_t focal_dimension(const RootDatum& datum, const RationalVector& h) {
    std::size_t dim = 0;
    for (const auto& crossing : diagram_crossings(datum, h))
        if (crossing.level != 0)
            dim += static_cast<std::size_t>(datum.roots[crossing.root_index].multiplicity);
    return dim;
}

}  // namespace

QuotientPresentation Space::validated_presentation(const RootDatum& datum, const WeylGroup& weyl,
                                                   const RationalMatrix& gamma,
                                                   const RationalMatrix& gamma0) {
    const UnitLatticeReport report = validate_unit_lattice(datum, weyl, gamma);
    if (!report.ok) throw InvalidInput("invalid unit lattice: " + joined(report.failures));
    return QuotientPresentation(gamma, gamma0);
}

Space::Space(std::string name, RootDatum datum, RationalMatrix gamma_basis, std::string notes,
             std::uint64_t weyl_cap)
    : name_(std::move(name)),
      datum_(std::move(datum)),
      gamma_(std::move(gamma_basis)),
      notes_(std::move(notes)),
      weyl_(enumerate_weyl_group(datum_, weyl_cap)),
      gamma0_(fundamental_lattice(datum_)),
      pi1_(validated_presentation(datum_, weyl_, gamma_, gamma0_)) {}

FocalOrbitDescriptor Space::orbit_from_points(const RationalVector& label_base,
                                              const std::vector<RationalVector>& orbit_points,
                                              const SubgroupDescriptor& wq,
                                              const SubgroupDescriptor& wq0) const {
    FocalOrbitDescriptor d;
    d.torus_intersection = orbit_points;
    std::sort(d.torus_intersection.begin(), d.torus_intersection.end());
    d.representative = d.torus_intersection.front();
    d.norm_squared = gram_norm_squared(datum_.gram, d.representative);
    d.dimension = focal_dimension(datum_, d.representative);

    // Same length and focal dimension across the whole family.
    for (const auto& v : d.torus_intersection) {
        if (gram_norm_squared(datum_.gram, v) != d.norm_squared)
            throw InternalInvariantViolation("family points with different lengths");
        if (focal_dimension(datum_, v) != d.dimension)
            throw InternalInvariantViolation("family points with different focal dimensions");
    }

    // Connected components: orbits of the parallel reflection subgroup.
    std::set<RationalVector> unseen(d.torus_intersection.begin(), d.torus_intersection.end());
    while (!unseen.empty()) {
        const RationalVector seed = *unseen.begin();
        std::set<RationalVector> component;
        for (std::size_t w : wq0.element_indices) {
            const RationalVector moved = weyl_.action(w, seed);
            if (!unseen.count(moved) && !component.count(moved))
                throw InternalInvariantViolation("component left the family");
            component.insert(moved);
        }
        d.component_representatives.push_back(*component.begin());
        for (const auto& v : component) unseen.erase(v);
    }
    std::sort(d.component_representatives.begin(), d.component_representatives.end());
    d.component_count = d.component_representatives.size();

    if (d.component_count != quotient_size(weyl_, wq, wq0))
        throw InternalInvariantViolation("component count does not match the subgroup index");

    d.homotopy_label = pi1_.label_of_vector(vec_sub(d.representative, label_base));

    // The label is a family invariant of each component; representatives of
    // one component agree, so check constancy across the parallel orbit of
    // the representative.
    for (std::size_t w : wq0.element_indices) {
        const RationalVector moved = weyl_.action(w, d.representative);
        if (pi1_.label_of_vector(vec_sub(moved, label_base)) != d.homotopy_label)
            throw InternalInvariantViolation("homotopy label varies within a component");
    }
    return d;
}

FocalOrbitDescriptor Space::focal_orbit(const RationalVector& base,
                                        const RationalVector& rep) const {
    if (base.size() != datum_.rank || rep.size() != datum_.rank)
        throw InvalidInput("vector length does not match rank");
    if (!lattice_contains(gamma_, vec_sub(rep, base)))
        throw InvalidInput("representative does not differ from the base by a lattice vector");

    const SubgroupDescriptor wq = centralizer_mod_lattice(datum_, weyl_, gamma_, base);
    const SubgroupDescriptor wq0 = parallel_subgroup(datum_, weyl_, base);
    if (!is_subgroup_of(wq0, wq))
        throw InternalInvariantViolation("parallel subgroup outside the lattice centralizer");
    if (!is_normal_in(weyl_, wq0, wq))
        throw InternalInvariantViolation("parallel subgroup is not normal");

    std::set<RationalVector> orbit;
    for (std::size_t w : wq.element_indices) orbit.insert(weyl_.action(w, rep));
    FocalOrbitDescriptor d = orbit_from_points(
        base, std::vector<RationalVector>(orbit.begin(), orbit.end()), wq, wq0);
    // Keep the caller's representative; the label moves with it.
    d.representative = rep;
    d.homotopy_label = pi1_.label_of_vector(vec_sub(rep, base));
    return d;
}

std::vector<FocalOrbitDescriptor> Space::partition_into_orbits(
    const RationalVector& coset_base, const std::vector<RationalVector>& points) const {
    const SubgroupDescriptor wq = centralizer_mod_lattice(datum_, weyl_, gamma_, coset_base);
    const SubgroupDescriptor wq0 = parallel_subgroup(datum_, weyl_, coset_base);
    if (!is_subgroup_of(wq0, wq))
        throw InternalInvariantViolation("parallel subgroup outside the lattice centralizer");
    if (!is_normal_in(weyl_, wq0, wq))
        throw InternalInvariantViolation("parallel subgroup is not normal");

    std::set<RationalVector> unassigned(points.begin(), points.end());
    std::vector<FocalOrbitDescriptor> out;
    while (!unassigned.empty()) {
        const RationalVector seed = *unassigned.begin();
        std::set<RationalVector> orbit;
        for (std::size_t w : wq.element_indices) {
            const RationalVector moved = weyl_.action(w, seed);
            if (!unassigned.count(moved) && !orbit.count(moved))
                throw InternalInvariantViolation(
                    "group orbit escaped the enumerated point set");
            orbit.insert(moved);
        }
        out.push_back(orbit_from_points(coset_base,
                                        std::vector<RationalVector>(orbit.begin(), orbit.end()),
                                        wq, wq0));
        for (const auto& v : orbit) unassigned.erase(v);
    }
    std::sort(out.begin(), out.end(), [](const FocalOrbitDescriptor& a,
                                         const FocalOrbitDescriptor& b) {
        if (a.norm_squared != b.norm_squared) return a.norm_squared < b.norm_squared;
        return a.representative < b.representative;
    });
    return out;
}

std::vector<FocalOrbitDescriptor> Space::enumerate_preimages(
    const RationalVector& target, const Rational& max_norm_squared) const {
    if (target.size() != datum_.rank) throw InvalidInput("vector length does not match rank");
    const auto coefficients =
        enumerate_lattice_points_in_ball(gamma_, datum_.gram, target, max_norm_squared);
    std::vector<RationalVector> points;
    for (const auto& n : coefficients) {
        RationalVector v = target;
        for (std::size_t j = 0; j < gamma_.cols(); ++j)
            v = vec_add(v, vec_scale(Rational(n[j]), gamma_.column(j)));
        points.push_back(v);
    }
    return partition_into_orbits(target, points);
}

std::vector<FocalOrbitDescriptor> Space::minimal_geodesics(const RationalVector& target) const {
    if (target.size() != datum_.rank) throw InvalidInput("vector length does not match rank");
    const ClosestVectors cv = closest_vectors(gamma_, datum_.gram, target);
    // Labels are relative to the smallest minimal vector, making the
    // reference family carry the zero label.
    return partition_into_orbits(cv.representatives.front(), cv.representatives);
}

PointClassification Space::classify_point(const RationalVector& h) const {
    if (h.size() != datum_.rank) throw InvalidInput("vector length does not match rank");
    PointClassification c;
    const auto crossings = diagram_crossings(datum_, h);
    c.regular = crossings.empty();
    c.index = focal_dimension(datum_, h);

    switch (dirichlet_classify(gamma_, datum_.gram, h).region) {
        case DirichletRegion::Interior: c.cut = CutPosition::BeforeCut; break;
        case DirichletRegion::Boundary: c.cut = CutPosition::CutPoint; break;
        case DirichletRegion::Exterior: c.cut = CutPosition::PastCut; break;
    }

    Rational max_abs(0);
    for (std::size_t i : datum_.positive_indices) {
        const Rational v = datum_.root_value(i, h).abs();
        if (v > max_abs) max_abs = v;
    }
    if (max_abs < Rational(1))
        c.conjugate = ConjugatePosition::BeforeFirstConjugate;
    else if (max_abs == Rational(1))
        c.conjugate = ConjugatePosition::FirstConjugate;
    else
        c.conjugate = ConjugatePosition::PastFirstConjugate;
    return c;
}

SimplyConnectedReport Space::simply_connected_report() const {
    SimplyConnectedReport report;
    report.gamma_equals_gamma0 =
        gamma0_.cols() == gamma_.cols() && lattices_equal(gamma_, gamma0_);
    report.pi1_trivial = pi1_.decomposition().is_trivial();

    if (gamma0_.cols() == datum_.rank) {
        report.alcove_checked = true;
        std::vector<RationalVector> samples;
        if (datum_.rank <= 2) {
            // Denominator 4 grid over [-3/2, 3/2]^rank.
            std::vector<Rational> line;
            for (int n = -6; n <= 6; ++n) line.push_back(Rational(Integer(n), Integer(4)));
            if (datum_.rank == 1) {
                for (const auto& x : line) samples.push_back({x});
            } else {
                for (const auto& x : line)
                    for (const auto& y : line) samples.push_back({x, y});
            }
        } else {
            std::mt19937 rng(0xC0FFEE + static_cast<unsigned>(datum_.rank));
            std::uniform_int_distribution<int> num(-24, 24);
            std::uniform_int_distribution<int> den(1, 12);
            for (int i = 0; i < 200; ++i) {
                RationalVector h(datum_.rank);
                for (std::size_t j = 0; j < datum_.rank; ++j)
                    h[j] = Rational(Integer(num(rng)), Integer(den(rng)));
                samples.push_back(h);
            }
        }

        for (const auto& h : samples) {
            const DirichletRegion lhs = dirichlet_classify(gamma_, datum_.gram, h).region;
            Rational max_abs(0);
            for (std::size_t i : datum_.positive_indices) {
                const Rational v = datum_.root_value(i, h).abs();
                if (v > max_abs) max_abs = v;
            }
            DirichletRegion rhs = DirichletRegion::Interior;
            if (max_abs == Rational(1))
                rhs = DirichletRegion::Boundary;
            else if (max_abs > Rational(1))
                rhs = DirichletRegion::Exterior;
            ++report.alcove.checked;
            if (lhs != rhs) {
                report.alcove.all_match = false;
                report.alcove.mismatches.push_back(h);
            }
        }
    }

    const bool lattice_vs_pi1 = report.gamma_equals_gamma0 == report.pi1_trivial;
    const bool alcove_vs_lattice =
        !report.alcove_checked || !report.gamma_equals_gamma0 || report.alcove.all_match;
    report.consistent = lattice_vs_pi1 && alcove_vs_lattice;
    return report;
}

}  // namespace geocount

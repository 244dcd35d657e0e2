#include "geocount/lattice.hpp"

#include <algorithm>

#include "geocount/errors.hpp"

namespace geocount {

bool lattice_contains(const RationalMatrix& basis, const RationalVector& v) {
    return solve_in_lattice(basis, v).has_value();
}

bool lattices_equal(const RationalMatrix& a, const RationalMatrix& b) {
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (!lattice_contains(b, a.column(j))) return false;
    for (std::size_t j = 0; j < b.cols(); ++j)
        if (!lattice_contains(a, b.column(j))) return false;
    return true;
}

RationalMatrix lattice_span_basis(const std::vector<RationalVector>& generators,
                                  std::size_t ambient_dim) {
    for (const auto& g : generators)
        if (g.size() != ambient_dim) throw InvalidInput("generator dimension mismatch");
    if (generators.empty()) return RationalMatrix(ambient_dim, 0);

    // Scale to integers, take the column Hermite form, scale back.
    Integer denom = 1;
    for (const auto& g : generators)
        for (const auto& x : g) denom = lcm(denom, x.denominator());
    IntMatrix scaled(ambient_dim, generators.size());
    for (std::size_t j = 0; j < generators.size(); ++j)
        for (std::size_t i = 0; i < ambient_dim; ++i) {
            const Rational v = generators[j][i] * Rational(denom);
            scaled.at(i, j) = v.numerator();
        }
    const IntMatrix h = hermite_column_basis(scaled);
    RationalMatrix out(ambient_dim, h.cols());
    for (std::size_t i = 0; i < ambient_dim; ++i)
        for (std::size_t j = 0; j < h.cols(); ++j)
            out.at(i, j) = Rational(h.at(i, j), denom);
    return out;
}

RationalMatrix fundamental_lattice(const RootDatum& datum) {
    std::vector<RationalVector> coroots;
    for (std::size_t i : datum.positive_indices) coroots.push_back(datum.coroot(i));
    return lattice_span_basis(coroots, datum.rank);
}

namespace {

// Root functionals as coordinate rows: a(h) = (G H_a)^T h.
std::vector<RationalVector> root_functionals(const RootDatum& datum) {
    std::vector<RationalVector> rows;
    for (std::size_t i : datum.positive_indices)
        rows.push_back(datum.gram.apply(datum.roots[i].covector));
    return rows;
}

// Lattice {y : C y integral} for a rational matrix C of full column rank,
// as basis columns.  Finds an invertible row subset S, so candidates live
// in S^{-1} Z^s, then cuts that down by the congruences from the remaining
// rows via an integer kernel computation.
RationalMatrix integral_preimage(const RationalMatrix& c) {
    const std::size_t s = c.cols();
    if (s == 0) return RationalMatrix(0, 0);

    std::vector<std::size_t> chosen;
    RationalMatrix sq(s, s);
    for (std::size_t row = 0; row < c.rows() && chosen.size() < s; ++row) {
        RationalMatrix trial(chosen.size() + 1, s);
        for (std::size_t i = 0; i < chosen.size(); ++i)
            for (std::size_t j = 0; j < s; ++j) trial.at(i, j) = c.at(chosen[i], j);
        for (std::size_t j = 0; j < s; ++j) trial.at(chosen.size(), j) = c.at(row, j);
        if (trial.rank() == chosen.size() + 1) chosen.push_back(row);
    }
    if (chosen.size() != s) throw InvalidInput("integral preimage requires full column rank");
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) sq.at(i, j) = c.at(chosen[i], j);

    const RationalMatrix y0 = sq.inverse();

    std::vector<std::size_t> rest;
    for (std::size_t row = 0; row < c.rows(); ++row)
        if (std::find(chosen.begin(), chosen.end(), row) == chosen.end()) rest.push_back(row);
    if (rest.empty()) return y0;

    RationalMatrix r(rest.size(), s);
    for (std::size_t i = 0; i < rest.size(); ++i)
        for (std::size_t j = 0; j < s; ++j) r.at(i, j) = c.at(rest[i], j);
    const RationalMatrix e = r.mul(y0);

    // {z integral : e z integral} = projection of the kernel of [D e | -D I].
    Integer denom = 1;
    for (std::size_t i = 0; i < e.rows(); ++i)
        for (std::size_t j = 0; j < e.cols(); ++j) denom = lcm(denom, e.at(i, j).denominator());
    IntMatrix stacked(rest.size(), s + rest.size());
    for (std::size_t i = 0; i < rest.size(); ++i) {
        for (std::size_t j = 0; j < s; ++j)
            stacked.at(i, j) = (e.at(i, j) * Rational(denom)).numerator();
        stacked.at(i, s + i) = -denom;
    }
    const IntMatrix kernel = integer_kernel(stacked);
    std::vector<RationalVector> zs;
    for (std::size_t j = 0; j < kernel.cols(); ++j) {
        RationalVector z(s);
        for (std::size_t i = 0; i < s; ++i) z[i] = Rational(kernel.at(i, j));
        zs.push_back(z);
    }
    const RationalMatrix z_basis = lattice_span_basis(zs, s);
    if (z_basis.cols() != s)
        throw InternalInvariantViolation("integral preimage lattice lost rank");
    return y0.mul(z_basis);
}

}  // namespace

CentralLatticeResult central_lattice(const RootDatum& datum) {
    CentralLatticeResult out;
    const auto functionals = root_functionals(datum);

    std::vector<RationalVector> covectors;
    for (std::size_t i : datum.positive_indices) covectors.push_back(datum.roots[i].covector);
    const RationalMatrix span = lattice_span_basis(covectors, datum.rank);

    if (span.cols() == datum.rank) {
        // Full rank: the dual of the integer span of the root functionals.
        const RationalMatrix lambda = lattice_span_basis(functionals, datum.rank);
        out.discrete = true;
        out.basis = lambda.transpose().inverse();
        return out;
    }

    // Euclidean directions present: restrict to the coroot span and compute
    // the integral preimage of the root functionals there.
    out.discrete = false;
    const RationalMatrix slice = fundamental_lattice(datum);
    if (slice.cols() == 0) {
        out.basis = RationalMatrix(datum.rank, 0);
        return out;
    }
    RationalMatrix c(functionals.size(), slice.cols());
    for (std::size_t i = 0; i < functionals.size(); ++i) {
        for (std::size_t j = 0; j < slice.cols(); ++j) {
            Rational v;
            for (std::size_t k = 0; k < datum.rank; ++k) v += functionals[i][k] * slice.at(k, j);
            c.at(i, j) = v;
        }
    }
    out.basis = slice.mul(integral_preimage(c));
    return out;
}

UnitLatticeReport validate_unit_lattice(const RootDatum& datum, const WeylGroup& group,
                                        const RationalMatrix& basis) {
    UnitLatticeReport report;
    auto fail = [&](const std::string& msg) {
        report.ok = false;
        report.failures.push_back(msg);
    };

    if (basis.rows() != datum.rank) {
        fail("lattice basis has wrong ambient dimension");
        return report;
    }
    if (basis.cols() != datum.rank || basis.rank() != datum.rank) {
        fail("lattice basis is not full rank");
        return report;
    }

    for (std::size_t i : datum.positive_indices)
        if (!lattice_contains(basis, datum.coroot(i)))
            fail("coroot " + vec_str(datum.coroot(i)) + " is not in the lattice");

    for (std::size_t i : datum.positive_indices)
        for (std::size_t j = 0; j < basis.cols(); ++j)
            if (!datum.root_value(i, basis.column(j)).is_integer())
                fail("root " + vec_str(datum.roots[i].covector) +
                     " takes a non-integer value on generator " + vec_str(basis.column(j)));

    for (std::size_t e = 0; e < group.size(); ++e) {
        if (group.element(e).word.size() != 1) continue;
        for (std::size_t j = 0; j < basis.cols(); ++j)
            if (!lattice_contains(basis, group.action(e, basis.column(j))))
                fail("lattice is not invariant under simple reflection " +
                     std::to_string(group.element(e).word[0]));
    }

    return report;
}

QuotientPresentation::QuotientPresentation(const RationalMatrix& ambient_basis,
                                           const RationalMatrix& sub_basis)
    : ambient_basis_(ambient_basis) {
    const std::size_t r = ambient_basis.cols();
    if (ambient_basis.rank() != r) throw InvalidInput("ambient lattice basis has dependent columns");

    // Sublattice generators in ambient coordinates; must be integral.
    IntMatrix n(r, sub_basis.cols());
    for (std::size_t j = 0; j < sub_basis.cols(); ++j) {
        const auto coords = solve_in_lattice(ambient_basis, sub_basis.column(j));
        if (!coords)
            throw InvalidInput("sublattice generator " + vec_str(sub_basis.column(j)) +
                               " is not in the ambient lattice");
        for (std::size_t i = 0; i < r; ++i) n.at(i, j) = (*coords)[i];
    }

    const SmithTransforms t = smith_with_transforms(n);
    u_ = t.u;
    const std::size_t lim = std::min(n.rows(), n.cols());
    for (std::size_t i = 0; i < lim; ++i) diag_.push_back(t.d.at(i, i));
    for (std::size_t i = 0; i < t.rank; ++i)
        if (diag_[i] > 1) decomposition_.invariant_factors.push_back(diag_[i]);
    decomposition_.free_rank = r - t.rank;
}

IntVector QuotientPresentation::label_of_coordinates(const IntVector& x) const {
    const IntVector y = u_.apply(x);
    IntVector torsion, free_part;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const Integer d = i < diag_.size() ? diag_[i] : Integer(0);
        if (d == 1) continue;  // trivial factor carries no information
        if (d == 0) {
            free_part.push_back(y[i]);
        } else {
            Integer rem;
            mpz_fdiv_r(rem.get_mpz_t(), y[i].get_mpz_t(), d.get_mpz_t());
            torsion.push_back(rem);
        }
    }
    torsion.insert(torsion.end(), free_part.begin(), free_part.end());
    return torsion;
}

IntVector QuotientPresentation::label_of_vector(const RationalVector& v) const {
    const auto coords = solve_in_lattice(ambient_basis_, v);
    if (!coords) throw InvalidInput("vector " + vec_str(v) + " is not in the ambient lattice");
    return label_of_coordinates(*coords);
}

SmithDecomposition fundamental_group(const RootDatum& datum, const RationalMatrix& basis) {
    return QuotientPresentation(basis, fundamental_lattice(datum)).decomposition();
}

ClosestVectors closest_vectors(const RationalMatrix& basis, const RationalMatrix& gram,
                               const RationalVector& h) {
    const auto points = enumerate_lattice_points_in_ball(basis, gram, h,
                                                         gram_norm_squared(gram, h));
    ClosestVectors out;
    bool first = true;
    for (const auto& n : points) {
        RationalVector v = h;
        for (std::size_t j = 0; j < basis.cols(); ++j)
            v = vec_add(v, vec_scale(Rational(n[j]), basis.column(j)));
        const Rational norm = gram_norm_squared(gram, v);
        if (first || norm < out.min_norm_squared) {
            out.min_norm_squared = norm;
            out.representatives.clear();
            first = false;
        }
        if (norm == out.min_norm_squared) out.representatives.push_back(v);
    }
    std::sort(out.representatives.begin(), out.representatives.end());
    return out;
}

std::vector<RationalVector> focal_equivalents(const RationalMatrix& basis,
                                              const RationalMatrix& gram,
                                              const RationalVector& h) {
    const Rational target = gram_norm_squared(gram, h);
    const auto points = enumerate_lattice_points_in_ball(basis, gram, h, target);
    std::vector<RationalVector> out;
    for (const auto& n : points) {
        RationalVector v = h;
        for (std::size_t j = 0; j < basis.cols(); ++j)
            v = vec_add(v, vec_scale(Rational(n[j]), basis.column(j)));
        if (gram_norm_squared(gram, v) == target) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

DirichletClassification dirichlet_classify(const RationalMatrix& basis,
                                           const RationalMatrix& gram,
                                           const RationalVector& h) {
    const Rational target = gram_norm_squared(gram, h);
    const auto points = enumerate_lattice_points_in_ball(basis, gram, h, target);
    DirichletClassification out;
    bool strict_improvement = false;
    for (const auto& n : points) {
        bool zero = true;
        for (const auto& x : n)
            if (x != 0) zero = false;
        if (zero) continue;
        RationalVector g(h.size());
        for (std::size_t j = 0; j < basis.cols(); ++j)
            g = vec_add(g, vec_scale(Rational(n[j]), basis.column(j)));
        const Rational norm = gram_norm_squared(gram, vec_add(h, g));
        if (norm < target) strict_improvement = true;
        out.witnesses.push_back(g);
    }
    std::sort(out.witnesses.begin(), out.witnesses.end());
    if (out.witnesses.empty())
        out.region = DirichletRegion::Interior;
    else
        out.region = strict_improvement ? DirichletRegion::Exterior : DirichletRegion::Boundary;
    return out;
}

const char* dirichlet_region_name(DirichletRegion region) {
    switch (region) {
        case DirichletRegion::Interior: return "interior";
        case DirichletRegion::Boundary: return "boundary";
        case DirichletRegion::Exterior: return "exterior";
    }
    return "unknown";
}

AlcoveCheckReport dirichlet_equals_alcove_check(const RootDatum& datum,
                                                const std::vector<RationalVector>& samples) {
    const RationalMatrix gamma0 = fundamental_lattice(datum);
    if (gamma0.cols() != datum.rank)
        throw InvalidInput("alcove comparison requires a full rank coroot lattice");

    AlcoveCheckReport report;
    for (const auto& h : samples) {
        const DirichletRegion lhs = dirichlet_classify(gamma0, datum.gram, h).region;

        Rational max_abs(0);
        for (std::size_t i : datum.positive_indices) {
            const Rational v = datum.root_value(i, h).abs();
            if (v > max_abs) max_abs = v;
        }
        DirichletRegion rhs = DirichletRegion::Interior;
        if (max_abs == Rational(1))
            rhs = DirichletRegion::Boundary;
        else if (max_abs > Rational(1))
            rhs = DirichletRegion::Exterior;

        ++report.checked;
        if (lhs != rhs) {
            report.all_match = false;
            report.mismatches.push_back(h);
        }
    }
    return report;
}

}  // namespace geocount

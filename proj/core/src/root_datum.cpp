#include "geocount/root_datum.hpp"

#include <algorithm>
#include <set>

#include "geocount/errors.hpp"

namespace geocount {

std::size_t RootDatum::root_index(const RationalVector& covector) const {
    auto it = index_by_covector.find(covector);
    if (it == index_by_covector.end())
        throw NotFound("no root with covector " + vec_str(covector));
    return it->second;
}

bool RootDatum::has_root(const RationalVector& covector) const {
    return index_by_covector.count(covector) > 0;
}

Rational RootDatum::root_value(std::size_t root_index, const RationalVector& h) const {
    return gram_dot(gram, roots[root_index].covector, h);
}

RationalVector RootDatum::coroot(std::size_t root_index) const {
    const RationalVector& ha = roots[root_index].covector;
    const Rational len = gram_norm_squared(gram, ha);
    return vec_scale(Rational(2) / len, ha);
}

namespace {

bool lex_positive(const RationalVector& v) {
    for (const auto& x : v) {
        if (x.sign() > 0) return true;
        if (x.sign() < 0) return false;
    }
    return false;
}

}  // namespace

RootDatum build_root_datum(std::size_t rank, const RationalMatrix& gram,
                           const std::vector<Root>& input_roots) {
    if (gram.rows() != rank || gram.cols() != rank)
        throw InvalidInput("gram matrix shape does not match rank");
    if (!gram.is_symmetric()) throw InvalidInput("gram matrix is not symmetric");
    if (rank > 0) {
        try {
            ldlt(gram);
        } catch (const InvalidInput&) {
            throw InvalidInput("gram matrix is not positive definite");
        }
    }

    std::map<RationalVector, int> mult_of;
    std::set<RationalVector> given;
    for (const auto& r : input_roots) {
        if (r.covector.size() != rank) throw InvalidInput("root covector length mismatch");
        if (vec_is_zero(r.covector)) throw InvalidInput("zero root covector");
        if (r.multiplicity < 1) throw InvalidInput("root multiplicity must be positive");
        if (given.count(r.covector)) throw InvalidInput("duplicate root " + vec_str(r.covector));
        given.insert(r.covector);
        const RationalVector neg = vec_scale(Rational(-1), r.covector);
        auto it = mult_of.find(neg);
        if (it != mult_of.end() && it->second != r.multiplicity)
            throw InvalidRootSystem("opposite roots with different multiplicities at " +
                                    vec_str(r.covector));
        mult_of[r.covector] = r.multiplicity;
        mult_of.emplace(neg, r.multiplicity);
    }

    std::vector<Root> positives;
    for (const auto& [cov, mult] : mult_of)
        if (lex_positive(cov)) positives.push_back({cov, mult});
    std::sort(positives.begin(), positives.end(),
              [](const Root& a, const Root& b) { return a.covector < b.covector; });

    RootDatum datum;
    datum.rank = rank;
    datum.gram = gram;
    for (const auto& r : positives) datum.roots.push_back(r);
    for (const auto& r : positives)
        datum.roots.push_back({vec_scale(Rational(-1), r.covector), r.multiplicity});
    for (std::size_t i = 0; i < datum.roots.size(); ++i)
        datum.index_by_covector[datum.roots[i].covector] = i;
    for (std::size_t i = 0; i < positives.size(); ++i) datum.positive_indices.push_back(i);

    // Crystallographic integrality: 2<b,a>/<a,a> must be an integer.
    for (const auto& a : datum.roots) {
        const Rational len = gram_norm_squared(gram, a.covector);
        for (const auto& b : datum.roots) {
            const Rational pairing = Rational(2) * gram_dot(gram, b.covector, a.covector) / len;
            if (!pairing.is_integer())
                throw InvalidRootSystem("non-crystallographic pair " + vec_str(a.covector) +
                                        ", " + vec_str(b.covector));
        }
    }

    // Each root reflection must permute the root set preserving multiplicity.
    for (std::size_t i : datum.positive_indices) {
        const RationalVector hv = datum.coroot(i);
        for (const auto& b : datum.roots) {
            const Rational value = gram_dot(gram, datum.roots[i].covector, b.covector);
            const RationalVector image = vec_sub(b.covector, vec_scale(value, hv));
            auto it = mult_of.find(image);
            if (it == mult_of.end() || it->second != b.multiplicity)
                throw InvalidRootSystem("reflection of " + vec_str(datum.roots[i].covector) +
                                        " does not permute the roots");
        }
    }

    // Simple roots: positive roots that are not sums of two positive roots.
    for (std::size_t i = 0; i < positives.size(); ++i) {
        bool decomposable = false;
        for (const auto& b : positives) {
            const RationalVector diff = vec_sub(positives[i].covector, b.covector);
            if (!vec_is_zero(diff) && lex_positive(diff) && mult_of.count(diff)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) datum.simple_indices.push_back(i);
    }

    if (!positives.empty()) {
        std::vector<RationalVector> simple_cols;
        for (std::size_t i : datum.simple_indices) simple_cols.push_back(positives[i].covector);
        const RationalMatrix s = RationalMatrix::from_columns(simple_cols);
        if (s.rank() != simple_cols.size())
            throw InvalidRootSystem("simple roots are not linearly independent");
        for (const auto& r : positives) {
            const auto coeffs = solve_full_column_rank(s, r.covector);
            bool ok = coeffs.has_value();
            if (ok)
                for (const auto& c : *coeffs)
                    if (!c.is_integer() || c.sign() < 0) ok = false;
            if (!ok)
                throw InvalidRootSystem("positive root " + vec_str(r.covector) +
                                        " is not a nonnegative integer combination of the "
                                        "simple roots");
        }
    }

    return datum;
}

std::vector<DiagramCrossing> diagram_crossings(const RootDatum& datum, const RationalVector& h) {
    if (h.size() != datum.rank) throw InvalidInput("vector length does not match rank");
    std::vector<DiagramCrossing> out;
    for (std::size_t i : datum.positive_indices) {
        const Rational v = datum.root_value(i, h);
        if (v.is_integer()) out.push_back({i, v.numerator()});
    }
    return out;
}

bool is_regular(const RootDatum& datum, const RationalVector& h) {
    return diagram_crossings(datum, h).empty();
}

}  // namespace geocount

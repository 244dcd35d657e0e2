#include "geocount/enumeration.hpp"

#include <algorithm>

#include "geocount/errors.hpp"

namespace geocount {

namespace {

struct BallSearch {
    const RationalMatrix& l;
    const std::vector<Rational>& d;
    const RationalVector& minimizer;  // real minimizer n* of the form
    Rational budget;                  // radius_squared - value at minimizer
    bool strict;
    std::vector<Integer> current;
    std::vector<IntVector> found;

    // Levels run from the last coordinate down; `remaining` is the budget
    // left after the outer levels' contributions.
    void descend(std::size_t level_plus_one, const Rational& remaining) {
        if (level_plus_one == 0) {
            if (strict ? (remaining > Rational(0)) : (remaining >= Rational(0)))
                found.push_back(current);
            return;
        }
        const std::size_t i = level_plus_one - 1;
        if (remaining < Rational(0)) return;

        // y_i = n_i + u_i with u_i collecting the fixed outer coordinates.
        Rational u = -minimizer[i];
        for (std::size_t j = i + 1; j < current.size(); ++j)
            u += l.at(j, i) * (Rational(current[j]) - minimizer[j]);

        auto contribution = [&](const Integer& n_i) {
            const Rational y = Rational(n_i) + u;
            return d[i] * y * y;
        };

        const Integer start = (-u).round_nearest();
        if (contribution(start) > remaining) return;
        for (Integer n_i = start;; n_i -= 1) {
            const Rational c = contribution(n_i);
            if (c > remaining) break;
            current[i] = n_i;
            descend(i, remaining - c);
        }
        for (Integer n_i = start + 1;; n_i += 1) {
            const Rational c = contribution(n_i);
            if (c > remaining) break;
            current[i] = n_i;
            descend(i, remaining - c);
        }
    }
};

}  // namespace

std::vector<IntVector> enumerate_lattice_points_in_ball(const RationalMatrix& basis,
                                                        const RationalMatrix& gram,
                                                        const RationalVector& center,
                                                        const Rational& radius_squared,
                                                        bool strict) {
    if (radius_squared < Rational(0)) throw InvalidInput("negative squared radius");
    if (gram.rows() != basis.rows() || center.size() != basis.rows())
        throw InvalidInput("ball enumeration shape mismatch");
    ldlt(gram);  // rejects non-SPD ambient forms

    const std::size_t k = basis.cols();
    const Rational center_norm = gram_norm_squared(gram, center);
    if (k == 0) {
        if (strict ? (center_norm < radius_squared) : (center_norm <= radius_squared))
            return {IntVector{}};
        return {};
    }

    // Quadratic form in the coefficients: f(n) = n^T A n + 2 b^T n + |c|^2.
    RationalMatrix a(k, k);
    RationalVector b(k);
    const auto cols = basis.columns();
    for (std::size_t i = 0; i < k; ++i) {
        b[i] = gram_dot(gram, cols[i], center);
        for (std::size_t j = i; j < k; ++j) {
            a.at(i, j) = gram_dot(gram, cols[i], cols[j]);
            a.at(j, i) = a.at(i, j);
        }
    }

    LdltFactorization f;
    try {
        f = ldlt(a);
    } catch (const InvalidInput&) {
        throw InvalidInput("ball enumeration requires independent basis columns");
    }

    RationalVector minimizer = solve_linear(a, vec_scale(Rational(-1), b));
    Rational value_at_min = center_norm;
    for (std::size_t i = 0; i < k; ++i) value_at_min += b[i] * minimizer[i];

    BallSearch search{f.l, f.d, minimizer, radius_squared - value_at_min, strict, IntVector(k), {}};
    search.descend(k, search.budget);
    std::sort(search.found.begin(), search.found.end());
    return search.found;
}

std::optional<IntVector> solve_in_lattice(const RationalMatrix& basis, const RationalVector& v) {
    if (basis.cols() > 0 && basis.rank() != basis.cols())
        throw InvalidInput("lattice basis has dependent columns");
    const auto x = solve_full_column_rank(basis, v);
    if (!x) return std::nullopt;
    IntVector out(x->size());
    for (std::size_t i = 0; i < x->size(); ++i) {
        if (!(*x)[i].is_integer()) return std::nullopt;
        out[i] = (*x)[i].numerator();
    }
    return out;
}

}  // namespace geocount

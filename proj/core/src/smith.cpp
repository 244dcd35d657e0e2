#include "geocount/smith.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "geocount/errors.hpp"

namespace geocount {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rational(const RationalMatrix& m) {
    if (!m.is_integer()) throw InvalidInput("matrix has non-integer entries");
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j).numerator();
    return out;
}

IntVector IntMatrix::column(std::size_t j) const {
    IntVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
    return out;
}

IntMatrix IntMatrix::mul(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw InvalidInput("integer matrix shape mismatch in mul");
    IntMatrix m(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                m.at(i, j) += at(i, k) * other.at(k, j);
        }
    return m;
}

IntVector IntMatrix::apply(const IntVector& v) const {
    if (v.size() != cols_) throw InvalidInput("integer matrix/vector shape mismatch");
    IntVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

RationalMatrix IntMatrix::to_rational() const {
    RationalMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = Rational(at(i, j));
    return m;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

SmithTransforms smith_with_transforms(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    IntMatrix d = a;
    IntMatrix u = IntMatrix::identity(m);
    IntMatrix v = IntMatrix::identity(n);

    auto row_swap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < n; ++c) std::swap(d.at(i, c), d.at(j, c));
        for (std::size_t c = 0; c < m; ++c) std::swap(u.at(i, c), u.at(j, c));
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < m; ++r) std::swap(d.at(r, i), d.at(r, j));
        for (std::size_t r = 0; r < n; ++r) std::swap(v.at(r, i), v.at(r, j));
    };
    // row i -= q * row j
    auto row_axpy = [&](std::size_t i, std::size_t j, const Integer& q) {
        for (std::size_t c = 0; c < n; ++c) d.at(i, c) -= q * d.at(j, c);
        for (std::size_t c = 0; c < m; ++c) u.at(i, c) -= q * u.at(j, c);
    };
    // col i -= q * col j
    auto col_axpy = [&](std::size_t i, std::size_t j, const Integer& q) {
        for (std::size_t r = 0; r < m; ++r) d.at(r, i) -= q * d.at(r, j);
        for (std::size_t r = 0; r < n; ++r) v.at(r, i) -= q * v.at(r, j);
    };
    auto row_negate = [&](std::size_t i) {
        for (std::size_t c = 0; c < n; ++c) d.at(i, c) = -d.at(i, c);
        for (std::size_t c = 0; c < m; ++c) u.at(i, c) = -u.at(i, c);
    };

    // Smallest-magnitude nonzero entry of the trailing submatrix.
    auto find_pivot = [&](std::size_t t) -> std::optional<std::pair<std::size_t, std::size_t>> {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        Integer best_abs;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (d.at(i, j) == 0) continue;
                Integer a_ij = abs(d.at(i, j));
                if (!best || a_ij < best_abs) {
                    best = {i, j};
                    best_abs = a_ij;
                }
            }
        return best;
    };

    const std::size_t lim = std::min(m, n);
    for (std::size_t t = 0; t < lim; ++t) {
        if (!find_pivot(t)) break;
        while (true) {
            auto p = *find_pivot(t);
            row_swap(t, p.first);
            col_swap(t, p.second);
            if (d.at(t, t) < 0) row_negate(t);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d.at(i, t) == 0) continue;
                row_axpy(i, t, floor_div(d.at(i, t), d.at(t, t)));
                if (d.at(i, t) != 0) clean = false;
            }
            if (!clean) continue;
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d.at(t, j) == 0) continue;
                col_axpy(j, t, floor_div(d.at(t, j), d.at(t, t)));
                if (d.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Pivot must divide the trailing submatrix for the ascending
            // divisibility chain; folding an offending row into row t makes
            // the next sweep shrink the pivot.
            bool fixed_up = false;
            for (std::size_t i = t + 1; i < m && !fixed_up; ++i)
                for (std::size_t j = t + 1; j < n && !fixed_up; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        row_axpy(t, i, Integer(-1));
                        fixed_up = true;
                    }
            if (!fixed_up) break;
        }
    }

    SmithTransforms out;
    out.u = std::move(u);
    out.v = std::move(v);
    out.rank = 0;
    for (std::size_t t = 0; t < lim; ++t)
        if (d.at(t, t) != 0) ++out.rank;
    out.d = std::move(d);

    // Cross-check the factorization u * a * v == d.
    if (!(out.u.mul(a).mul(out.v) == out.d))
        throw InternalInvariantViolation("smith transform verification failed");
    return out;
}

SmithDecomposition smith_normal_form(const RationalMatrix& m) {
    const IntMatrix a = IntMatrix::from_rational(m);
    const SmithTransforms t = smith_with_transforms(a);
    SmithDecomposition out;
    for (std::size_t i = 0; i < t.rank; ++i)
        if (t.d.at(i, i) > 1) out.invariant_factors.push_back(t.d.at(i, i));
    out.free_rank = a.cols() - t.rank;
    return out;
}

IntMatrix hermite_column_basis(const IntMatrix& a, IntMatrix* v_out) {
    const std::size_t m = a.rows(), n = a.cols();
    IntMatrix h = a;
    IntMatrix v = IntMatrix::identity(n);

    auto col_swap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < m; ++r) std::swap(h.at(r, i), h.at(r, j));
        for (std::size_t r = 0; r < n; ++r) std::swap(v.at(r, i), v.at(r, j));
    };
    auto col_axpy = [&](std::size_t i, std::size_t j, const Integer& q) {
        for (std::size_t r = 0; r < m; ++r) h.at(r, i) -= q * h.at(r, j);
        for (std::size_t r = 0; r < n; ++r) v.at(r, i) -= q * v.at(r, j);
    };
    auto col_negate = [&](std::size_t j) {
        for (std::size_t r = 0; r < m; ++r) h.at(r, j) = -h.at(r, j);
        for (std::size_t r = 0; r < n; ++r) v.at(r, j) = -v.at(r, j);
    };

    std::size_t next = 0;  // next pivot column position
    for (std::size_t row = 0; row < m && next < n; ++row) {
        while (true) {
            std::size_t best = n;
            Integer best_abs;
            for (std::size_t j = next; j < n; ++j) {
                if (h.at(row, j) == 0) continue;
                Integer a_rj = abs(h.at(row, j));
                if (best == n || a_rj < best_abs) {
                    best = j;
                    best_abs = a_rj;
                }
            }
            if (best == n) break;
            col_swap(next, best);
            if (h.at(row, next) < 0) col_negate(next);
            bool clean = true;
            for (std::size_t j = next + 1; j < n; ++j) {
                if (h.at(row, j) == 0) continue;
                col_axpy(j, next, floor_div(h.at(row, j), h.at(row, next)));
                if (h.at(row, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h.at(row, next) == 0) continue;
        // Canonical form: entries left of the pivot reduced into [0, pivot).
        for (std::size_t j = 0; j < next; ++j) {
            Integer q = floor_div(h.at(row, j), h.at(row, next));
            if (q != 0) col_axpy(j, next, q);
        }
        ++next;
    }

    if (v_out) *v_out = v;
    IntMatrix basis(m, next);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < next; ++j) basis.at(i, j) = h.at(i, j);
    return basis;
}

IntMatrix integer_kernel(const IntMatrix& a) {
    IntMatrix v;
    const IntMatrix basis = hermite_column_basis(a, &v);
    const std::size_t lattice_rank = basis.cols();
    IntMatrix kernel(a.cols(), a.cols() - lattice_rank);
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t j = lattice_rank; j < a.cols(); ++j)
            kernel.at(i, j - lattice_rank) = v.at(i, j);
    return kernel;
}

}  // namespace geocount

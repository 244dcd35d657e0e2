#include "geocount/linalg.hpp"

#include <sstream>

#include "geocount/errors.hpp"

namespace geocount {

RationalVector vec_add(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw InvalidInput("vector size mismatch in add");
    RationalVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RationalVector vec_sub(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw InvalidInput("vector size mismatch in sub");
    RationalVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

RationalVector vec_scale(const Rational& c, const RationalVector& a) {
    RationalVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
    return out;
}

bool vec_is_zero(const RationalVector& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

std::string vec_str(const RationalVector& a) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ",";
        os << a[i].str();
    }
    os << "]";
    return os.str();
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_) throw InvalidInput("matrix entry count mismatch");
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
    if (rows.empty()) return RationalMatrix(0, 0);
    RationalMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw InvalidInput("ragged rows in matrix construction");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& cols) {
    if (cols.empty()) return RationalMatrix(0, 0);
    RationalMatrix m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != m.rows_) throw InvalidInput("ragged columns in matrix construction");
        for (std::size_t i = 0; i < m.rows_; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

RationalVector RationalMatrix::row(std::size_t i) const {
    RationalVector out(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out[j] = at(i, j);
    return out;
}

RationalVector RationalMatrix::column(std::size_t j) const {
    RationalVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
    return out;
}

std::vector<RationalVector> RationalMatrix::columns() const {
    std::vector<RationalVector> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

RationalMatrix RationalMatrix::mul(const RationalMatrix& other) const {
    if (cols_ != other.rows_) throw InvalidInput("matrix shape mismatch in mul");
    RationalMatrix m(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                m.at(i, j) += at(i, k) * other.at(k, j);
        }
    return m;
}

RationalVector RationalMatrix::apply(const RationalVector& v) const {
    if (v.size() != cols_) throw InvalidInput("matrix/vector shape mismatch in apply");
    RationalVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

bool RationalMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool RationalMatrix::is_integer() const {
    for (const auto& x : e_)
        if (!x.is_integer()) return false;
    return true;
}

bool RationalMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

namespace {

// Reduces a copy to row echelon form, returning the rank.  When `augmented`
// is nonnull it receives the same row operations (used by inverse/solve).
std::size_t echelon(RationalMatrix& m, RationalMatrix* augmented) {
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != pivot_row) {
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(sel, j), m.at(pivot_row, j));
            if (augmented)
                for (std::size_t j = 0; j < augmented->cols(); ++j)
                    std::swap(augmented->at(sel, j), augmented->at(pivot_row, j));
        }
        const Rational inv_pivot = Rational(1) / m.at(pivot_row, col);
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(pivot_row, j) *= inv_pivot;
        if (augmented)
            for (std::size_t j = 0; j < augmented->cols(); ++j)
                augmented->at(pivot_row, j) *= inv_pivot;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pivot_row || m.at(i, col).is_zero()) continue;
            const Rational f = m.at(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m.at(i, j) -= f * m.at(pivot_row, j);
            if (augmented)
                for (std::size_t j = 0; j < augmented->cols(); ++j)
                    augmented->at(i, j) -= f * augmented->at(pivot_row, j);
        }
        ++pivot_row;
    }
    return pivot_row;
}

}  // namespace

std::size_t RationalMatrix::rank() const {
    RationalMatrix m = *this;
    return echelon(m, nullptr);
}

RationalMatrix RationalMatrix::inverse() const {
    if (rows_ != cols_) throw InvalidInput("inverse of non-square matrix");
    RationalMatrix m = *this;
    RationalMatrix inv = identity(rows_);
    if (echelon(m, &inv) != rows_) throw InvalidInput("inverse of singular matrix");
    return inv;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

bool operator<(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.e_ < b.e_;
}

RationalVector solve_linear(const RationalMatrix& a, const RationalVector& b) {
    if (a.rows() != a.cols()) throw InvalidInput("solve_linear requires a square matrix");
    if (b.size() != a.rows()) throw InvalidInput("solve_linear shape mismatch");
    return a.inverse().apply(b);
}

std::optional<RationalVector> solve_full_column_rank(const RationalMatrix& a,
                                                     const RationalVector& b) {
    if (b.size() != a.rows()) throw InvalidInput("solve shape mismatch");
    if (a.cols() == 0) {
        if (!vec_is_zero(b)) return std::nullopt;
        return RationalVector{};
    }
    // Row-reduce [A | b]; with independent columns the reduced system reads
    // off a unique candidate, and any leftover nonzero rhs row means b is
    // outside the column span.
    RationalMatrix m(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
        m.at(i, a.cols()) = b[i];
    }
    RationalMatrix work = m;
    echelon(work, nullptr);

    // Locate pivot columns of the reduced matrix.
    std::vector<std::size_t> pivot_col_of_row;
    for (std::size_t i = 0; i < work.rows(); ++i) {
        std::size_t j = 0;
        while (j < work.cols() && work.at(i, j).is_zero()) ++j;
        if (j == work.cols()) continue;
        pivot_col_of_row.push_back(j);
    }
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
        if (pivot_col_of_row[r] == a.cols()) return std::nullopt;  // row [0..0 | 1]
    if (pivot_col_of_row.size() != a.cols())
        throw InvalidInput("solve requires full column rank");

    RationalVector x(a.cols());
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
        x[pivot_col_of_row[r]] = work.at(r, a.cols());

    // The echelon pass already guarantees consistency, but the check is cheap.
    if (a.apply(x) != b) return std::nullopt;
    return x;
}

LdltFactorization ldlt(const RationalMatrix& a) {
    if (!a.is_symmetric()) throw InvalidInput("ldlt requires a symmetric matrix");
    const std::size_t n = a.rows();
    RationalMatrix l = RationalMatrix::identity(n);
    std::vector<Rational> d(n);
    for (std::size_t j = 0; j < n; ++j) {
        Rational dj = a.at(j, j);
        for (std::size_t k = 0; k < j; ++k) dj -= l.at(j, k) * l.at(j, k) * d[k];
        if (dj.sign() <= 0) throw InvalidInput("ldlt requires a positive definite matrix");
        d[j] = dj;
        for (std::size_t i = j + 1; i < n; ++i) {
            Rational s = a.at(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l.at(i, k) * l.at(j, k) * d[k];
            l.at(i, j) = s / dj;
        }
    }
    return {l, d};
}

Rational gram_dot(const RationalMatrix& gram, const RationalVector& a, const RationalVector& b) {
    if (a.size() != gram.rows() || b.size() != gram.cols())
        throw InvalidInput("gram_dot shape mismatch");
    Rational out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out += a[i] * gram.at(i, j) * b[j];
    }
    return out;
}

Rational gram_norm_squared(const RationalMatrix& gram, const RationalVector& a) {
    return gram_dot(gram, a, a);
}

}  // namespace geocount

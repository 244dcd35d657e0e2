#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "geocount/rational.hpp"

namespace geocount {

// Coordinate vector over the rationals.  Comparisons are lexicographic,
// which every deterministic ordering in this library leans on.
using RationalVector = std::vector<Rational>;

RationalVector vec_add(const RationalVector& a, const RationalVector& b);
RationalVector vec_sub(const RationalVector& a, const RationalVector& b);
RationalVector vec_scale(const Rational& c, const RationalVector& a);
bool vec_is_zero(const RationalVector& a);
std::string vec_str(const RationalVector& a);

// Dense rational matrix, row-major.  Shape is fixed at construction.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_rows(const std::vector<RationalVector>& rows);
    static RationalMatrix from_columns(const std::vector<RationalVector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    RationalVector row(std::size_t i) const;
    RationalVector column(std::size_t j) const;
    std::vector<RationalVector> columns() const;

    RationalMatrix transpose() const;
    RationalMatrix mul(const RationalMatrix& other) const;
    RationalVector apply(const RationalVector& v) const;

    bool is_symmetric() const;
    bool is_integer() const;
    bool is_zero() const;

    std::size_t rank() const;

    // Inverse of a square regular matrix; throws InvalidInput when singular.
    RationalMatrix inverse() const;

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator!=(const RationalMatrix& a, const RationalMatrix& b) { return !(a == b); }
    // Lexicographic over (rows, cols, entries); used as a map key.
    friend bool operator<(const RationalMatrix& a, const RationalMatrix& b);

private:
    std::size_t rows_, cols_;
    std::vector<Rational> e_;
};

// Unique solution x of A x = b for square regular A; throws InvalidInput
// when A is singular.
RationalVector solve_linear(const RationalMatrix& a, const RationalVector& b);

// Least structured solve: returns the unique x with A x = b when A has full
// column rank and b lies in the column span, std::nullopt when b is outside
// the span, and throws InvalidInput when the columns are dependent.
std::optional<RationalVector> solve_full_column_rank(const RationalMatrix& a,
                                                     const RationalVector& b);

// Exact LDL^T factorization of a symmetric positive definite matrix:
// A = L D L^T with L unit lower triangular and D diagonal, all pivots > 0.
// Throws InvalidInput when A is not symmetric positive definite.
struct LdltFactorization {
    RationalMatrix l;
    std::vector<Rational> d;
};
LdltFactorization ldlt(const RationalMatrix& a);

// <a, b> with respect to a symmetric bilinear form.
Rational gram_dot(const RationalMatrix& gram, const RationalVector& a, const RationalVector& b);
Rational gram_norm_squared(const RationalMatrix& gram, const RationalVector& a);

}  // namespace geocount

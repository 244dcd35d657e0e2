#pragma once

#include <cstddef>
#include <vector>

#include "geocount/linalg.hpp"
#include "geocount/rational.hpp"

namespace geocount {

using IntVector = std::vector<Integer>;

// Dense arbitrary-precision integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    // Rejects non-integer entries with InvalidInput.
    static IntMatrix from_rational(const RationalMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Integer& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    IntVector column(std::size_t j) const;
    IntMatrix mul(const IntMatrix& other) const;
    IntVector apply(const IntVector& v) const;
    RationalMatrix to_rational() const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b);

private:
    std::size_t rows_, cols_;
    std::vector<Integer> e_;
};

// Diagonal form of an integer matrix presentation of a finitely generated
// abelian group: torsion factors in ascending divisibility order with
// trivial factors dropped, plus the rank of the free part.
struct SmithDecomposition {
    std::vector<Integer> invariant_factors;
    std::size_t free_rank = 0;

    bool is_trivial() const { return invariant_factors.empty() && free_rank == 0; }
    friend bool operator==(const SmithDecomposition& a, const SmithDecomposition& b) = default;
};

// Structure of the quotient of Z^cols by the row span of m.  Entries must be
// integers (InvalidInput otherwise).
SmithDecomposition smith_normal_form(const RationalMatrix& m);

// Full decomposition u * a * v = d with u, v unimodular and d diagonal,
// diagonal entries nonnegative in ascending divisibility order.
struct SmithTransforms {
    IntMatrix u, v, d;
    std::size_t rank = 0;  // nonzero diagonal entries
};
SmithTransforms smith_with_transforms(const IntMatrix& a);

// Column-style Hermite normal form: returns the canonical basis of the
// column lattice of a (zero columns dropped).  Pivots are positive and
// entries to the left of each pivot lie in [0, pivot).  When v_out is
// nonnull it receives the full unimodular column transform (a * v = h with
// zero columns kept), which is how integer kernels are extracted.
IntMatrix hermite_column_basis(const IntMatrix& a, IntMatrix* v_out = nullptr);

// Basis for {x in Z^cols : a x = 0} as matrix columns.
IntMatrix integer_kernel(const IntMatrix& a);

}  // namespace geocount

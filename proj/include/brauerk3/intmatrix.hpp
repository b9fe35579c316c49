#pragma once

// Small dense integer matrices with exact Smith normal form and saturated
// integer kernels.

#include "brauerk3/arith.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace brauerk3 {

using IntVector = std::vector<Int>;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_columns(const std::vector<IntVector>& columns);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector column(std::size_t j) const;
    IntMatrix transpose() const;
    IntMatrix pow(unsigned n) const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend IntVector operator*(const IntMatrix& a, const IntVector& v);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

/// Nonzero diagonal entries d1 | d2 | ... of the Smith normal form, all
/// positive. Their count is the rank.
std::vector<Int> smith_invariants(IntMatrix a);

std::size_t rank(const IntMatrix& a);

Int determinant(const IntMatrix& a);

/// Columns form a Z-basis of {x in Z^n : a x = 0}; such a basis spans a
/// saturated sublattice.
IntMatrix integer_kernel(const IntMatrix& a);

/// The unique x with basis * x = y when basis has full column rank and y is
/// in its Z-span; nullopt otherwise.
std::optional<IntVector> solve_in_basis(const IntMatrix& basis, const IntVector& y);

/// True iff the Z-span of the columns equals its saturation in Z^rows.
bool is_saturated(const IntMatrix& generators);

}  // namespace brauerk3

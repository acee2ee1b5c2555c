#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include <gmpxx.h>

#include "zzmod/errors.hpp"

namespace zzmod {

using Int = mpz_class;

/// Dense matrix of arbitrary-precision integers, row-major.
///
/// Shapes with zero rows or zero columns are legal; they carry maps to or
/// from the zero module and show up constantly at zero-rank vertices.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> init);

    static IntMatrix identity(std::size_t n);
    static IntMatrix column(std::initializer_list<long> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool has_zero_dim() const { return rows_ == 0 || cols_ == 0; }

    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const IntMatrix&) const = default;

    bool is_zero() const;
    bool is_identity() const;

    IntMatrix transposed() const;
    IntMatrix negated() const;

    /// Rows [i0, i1) as a new matrix.
    IntMatrix row_range(std::size_t i0, std::size_t i1) const;
    /// Columns [j0, j1) as a new matrix.
    IntMatrix col_range(std::size_t j0, std::size_t j1) const;
    IntMatrix column_at(std::size_t j) const { return col_range(j, j + 1); }

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);
    /// row dst += c * row src
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& c);
    /// col dst += c * col src
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& c);

    /// Writes `block` into this matrix with top-left corner (i0, j0).
    void place(std::size_t i0, std::size_t j0, const IntMatrix& block);

    const std::vector<Int>& entries() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);

/// Side-by-side concatenation [a | b]; row counts must agree.
IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);
/// Stacked concatenation [a ; b]; column counts must agree.
IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b);
/// Block-diagonal matrix diag(a, b).
IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b);

/// Total order on matrices: shape first, then entries lexicographically.
int compare(const IntMatrix& a, const IntMatrix& b);

} // namespace zzmod

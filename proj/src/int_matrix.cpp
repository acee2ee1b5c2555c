#include "zzmod/int_matrix.hpp"

#include <utility>

namespace zzmod {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
        if (row.size() != cols_)
            throw DimensionError("ragged initializer for IntMatrix");
        for (long v : row) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::column(std::initializer_list<long> entries) {
    IntMatrix m(entries.size(), 1);
    std::size_t i = 0;
    for (long v : entries) m.at(i++, 0) = v;
    return m;
}

bool IntMatrix::is_zero() const {
    for (const Int& v : data_)
        if (v != 0) return false;
    return true;
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::negated() const {
    IntMatrix n = *this;
    for (Int& v : n.data_) v = -v;
    return n;
}

IntMatrix IntMatrix::row_range(std::size_t i0, std::size_t i1) const {
    if (i0 > i1 || i1 > rows_) throw DimensionError("row_range out of bounds");
    IntMatrix r(i1 - i0, cols_);
    for (std::size_t i = i0; i < i1; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i - i0, j) = at(i, j);
    return r;
}

IntMatrix IntMatrix::col_range(std::size_t j0, std::size_t j1) const {
    if (j0 > j1 || j1 > cols_) throw DimensionError("col_range out of bounds");
    IntMatrix r(rows_, j1 - j0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = j0; j < j1; ++j) r.at(i, j - j0) = at(i, j);
    return r;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k) at(k, j) = -at(k, j);
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t k = 0; k < cols_; ++k)
        mpz_addmul(at(dst, k).get_mpz_t(), c.get_mpz_t(), at(src, k).get_mpz_t());
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t k = 0; k < rows_; ++k)
        mpz_addmul(at(k, dst).get_mpz_t(), c.get_mpz_t(), at(k, src).get_mpz_t());
}

void IntMatrix::place(std::size_t i0, std::size_t j0, const IntMatrix& block) {
    if (i0 + block.rows() > rows_ || j0 + block.cols() > cols_)
        throw DimensionError("place: block exceeds matrix bounds");
    for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j) at(i0 + i, j0 + j) = block.at(i, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionError("matrix product dimension mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                mpz_addmul(c.at(i, j).get_mpz_t(), aik.get_mpz_t(), b.at(k, j).get_mpz_t());
        }
    return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("matrix sum dimension mismatch");
    IntMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
}

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("hconcat row mismatch");
    IntMatrix c(a.rows(), a.cols() + b.cols());
    c.place(0, 0, a);
    c.place(0, a.cols(), b);
    return c;
}

IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols()) throw DimensionError("vconcat column mismatch");
    IntMatrix c(a.rows() + b.rows(), a.cols());
    c.place(0, 0, a);
    c.place(a.rows(), 0, b);
    return c;
}

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(a.rows() + b.rows(), a.cols() + b.cols());
    c.place(0, 0, a);
    c.place(a.rows(), a.cols(), b);
    return c;
}

int compare(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) return a.rows() < b.rows() ? -1 : 1;
    if (a.cols() != b.cols()) return a.cols() < b.cols() ? -1 : 1;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        int c = cmp(a.entries()[i], b.entries()[i]);
        if (c != 0) return c;
    }
    return 0;
}

} // namespace zzmod

#ifndef CYCLEDUAL_MATRIX_HPP
#define CYCLEDUAL_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "cycledual/gf.hpp"

namespace cycledual {

/// Row-major dense matrix of raw field elements. The field travels
/// separately; every routine that does arithmetic takes it explicitly.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::span<Elem> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<const Elem> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    Elem& at(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    Elem at(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    /// Appends a row; the first row fixes the column count of an empty matrix.
    void append_row(std::span<const Elem> values);

    friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

/// Row space of a matrix in reduced echelon form, for rank and membership.
class RowSpace {
public:
    RowSpace(Field field, const Matrix& generators);

    std::size_t rank() const noexcept { return pivots_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    bool contains(std::span<const Elem> word) const;

private:
    Field field_;
    std::size_t cols_;
    std::vector<std::vector<Elem>> rows_;
    std::vector<std::size_t> pivots_;
};

std::size_t rank(const Field& field, const Matrix& m);

/// Σ_l a_l · b_l^(2^conj_k). conj_k = 0 is the Euclidean form.
Elem inner_product(const Field& field, std::span<const Elem> a, std::span<const Elem> b, unsigned conj_k = 0);

/// True iff every pair of rows (including a row with itself) has zero inner product.
bool rows_pairwise_orthogonal(const Field& field, const Matrix& m, unsigned conj_k = 0);

}  // namespace cycledual

#endif  // CYCLEDUAL_MATRIX_HPP

#include "cycledual/matrix.hpp"

#include <stdexcept>

namespace cycledual {

void Matrix::append_row(std::span<const Elem> values) {
    if (rows_ == 0 && data_.empty()) cols_ = values.size();
    if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

RowSpace::RowSpace(Field field, const Matrix& generators) : field_(std::move(field)), cols_(generators.cols()) {
    std::vector<std::vector<Elem>> work;
    work.reserve(generators.rows());
    for (std::size_t r = 0; r < generators.rows(); ++r) {
        const auto row = generators.row(r);
        work.emplace_back(row.begin(), row.end());
    }

    std::size_t next = 0;
    for (std::size_t col = 0; col < cols_ && next < work.size(); ++col) {
        std::size_t pick = next;
        while (pick < work.size() && work[pick][col] == 0) ++pick;
        if (pick == work.size()) continue;
        std::swap(work[pick], work[next]);
        auto& pivot_row = work[next];
        const Elem scale = field_.inv(pivot_row[col]);
        if (scale != 1) {
            for (std::size_t c = col; c < cols_; ++c) pivot_row[c] = field_.mul(pivot_row[c], scale);
        }
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (r == next) continue;
            const Elem f = work[r][col];
            if (f == 0) continue;
            for (std::size_t c = col; c < cols_; ++c) work[r][c] ^= field_.mul(f, pivot_row[c]);
        }
        pivots_.push_back(col);
        ++next;
    }
    work.resize(next);
    rows_ = std::move(work);
}

bool RowSpace::contains(std::span<const Elem> word) const {
    if (word.size() != cols_) throw std::invalid_argument("word length mismatch");
    std::vector<Elem> w(word.begin(), word.end());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Elem f = w[pivots_[i]];
        if (f == 0) continue;
        const auto& row = rows_[i];
        for (std::size_t c = pivots_[i]; c < cols_; ++c) w[c] ^= field_.mul(f, row[c]);
    }
    for (Elem e : w) {
        if (e != 0) return false;
    }
    return true;
}

std::size_t rank(const Field& field, const Matrix& m) { return RowSpace(field, m).rank(); }

Elem inner_product(const Field& field, std::span<const Elem> a, std::span<const Elem> b, unsigned conj_k) {
    if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
    Elem acc = 0;
    for (std::size_t l = 0; l < a.size(); ++l) {
        if (a[l] == 0 || b[l] == 0) continue;
        acc ^= field.mul(a[l], conj_k == 0 ? b[l] : field.frobenius(b[l], conj_k));
    }
    return acc;
}

bool rows_pairwise_orthogonal(const Field& field, const Matrix& m, unsigned conj_k) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.rows(); ++j) {
            // The Euclidean form is symmetric, so half the pairs suffice there.
            if (conj_k == 0 && j < i) continue;
            if (inner_product(field, m.row(i), m.row(j), conj_k) != 0) return false;
        }
    }
    return true;
}

}  // namespace cycledual

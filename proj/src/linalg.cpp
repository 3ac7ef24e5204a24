#include "linalg.hpp"

#include <algorithm>

namespace flagcodes {

Matrix::Matrix(FieldRef ctx, size_t rows, size_t cols, std::vector<uint16_t> entries)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_)
        fail(ErrorCode::ShapeMismatch, "entry count does not match matrix shape");
    for (uint16_t v : a_)
        if (v >= ctx_->q())
            fail(ErrorCode::ParseError, "element code out of range for the field");
}

Matrix Matrix::identity(const FieldRef& ctx, size_t n) { return scalar(ctx, n, 1); }

Matrix Matrix::scalar(const FieldRef& ctx, size_t n, uint16_t lambda) {
    Matrix m(ctx, n, n);
    for (size_t i = 0; i < n; ++i) m.set(i, i, lambda);
    return m;
}

Matrix Matrix::from_rows(const FieldRef& ctx, const std::vector<std::vector<uint16_t>>& rows,
                         size_t cols) {
    Matrix m(ctx, rows.size(), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            fail(ErrorCode::ShapeMismatch, "row length does not match column count");
        for (size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

std::vector<uint16_t> Matrix::row(size_t r) const {
    return {a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_};
}

RrefResult Matrix::rref() const {
    Matrix r = *this;
    const FieldCtx& f = *ctx_;
    std::vector<size_t> pivots;
    size_t pivot_row = 0;
    for (size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
        size_t sel = pivot_row;
        while (sel < rows_ && r.at(sel, col) == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != pivot_row)
            for (size_t c = 0; c < cols_; ++c)
                std::swap(r.a_[pivot_row * cols_ + c], r.a_[sel * cols_ + c]);
        uint16_t scale = f.inv(r.at(pivot_row, col));
        if (scale != 1)
            for (size_t c = col; c < cols_; ++c)
                r.set(pivot_row, c, f.mul(scale, r.at(pivot_row, c)));
        for (size_t i = 0; i < rows_; ++i) {
            if (i == pivot_row) continue;
            uint16_t factor = r.at(i, col);
            if (factor == 0) continue;
            for (size_t c = col; c < cols_; ++c)
                r.set(i, c, f.sub(r.at(i, c), f.mul(factor, r.at(pivot_row, c))));
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    return {std::move(r), pivot_row, std::move(pivots)};
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    require_same_field(rhs);
    if (cols_ != rhs.rows_)
        fail(ErrorCode::ShapeMismatch, "inner dimensions do not match in matrix product");
    const FieldCtx& f = *ctx_;
    Matrix out(ctx_, rows_, rhs.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t k = 0; k < cols_; ++k) {
            uint16_t aik = at(i, k);
            if (aik == 0) continue;
            for (size_t j = 0; j < rhs.cols_; ++j) {
                uint16_t prod = f.mul(aik, rhs.at(k, j));
                if (prod) out.set(i, j, f.add(out.at(i, j), prod));
            }
        }
    }
    return out;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) fail(ErrorCode::ShapeMismatch, "inverse requires a square matrix");
    Matrix aug(ctx_, rows_, 2 * cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.set(i, j, at(i, j));
        aug.set(i, cols_ + i, 1);
    }
    RrefResult red = aug.rref();
    if (red.rank < rows_) fail(ErrorCode::Singular, "matrix is singular");
    Matrix out(ctx_, rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out.set(i, j, red.reduced.at(i, cols_ + j));
    return out;
}

Matrix Matrix::applied(const FieldAutomorphism& phi) const {
    if (phi.is_identity()) return *this;
    Matrix out = *this;
    for (uint16_t& v : out.a_) v = ctx_->frobenius(phi, v);
    return out;
}

Matrix Matrix::stacked(const Matrix& below) const {
    require_same_field(below);
    if (cols_ != below.cols_)
        fail(ErrorCode::ShapeMismatch, "column counts differ in vertical concatenation");
    Matrix out(ctx_, rows_ + below.rows_, cols_);
    std::copy(a_.begin(), a_.end(), out.a_.begin());
    std::copy(below.a_.begin(), below.a_.end(), out.a_.begin() + a_.size());
    return out;
}

std::strong_ordering operator<=>(const Matrix& a, const Matrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.a_.begin(), a.a_.end(), b.a_.begin(),
                                                  b.a_.end());
}

void Matrix::require_same_field(const Matrix& other) const {
    if (!ctx_->same_field(*other.ctx_))
        fail(ErrorCode::MixedFields, "matrices over different fields");
}

} // namespace flagcodes

#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "gf.hpp"

namespace flagcodes {

class Matrix;

struct RrefResult {
    Matrix reduced;
    size_t rank;
    std::vector<size_t> pivots;
};

/// Dense matrix over F_q with exact arithmetic. Immutable value semantics:
/// operations return fresh matrices. Entries are stored as element codes.
class Matrix {
public:
    Matrix(FieldRef ctx, size_t rows, size_t cols)
        : ctx_(std::move(ctx)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    Matrix(FieldRef ctx, size_t rows, size_t cols, std::vector<uint16_t> entries);

    static Matrix identity(const FieldRef& ctx, size_t n);
    static Matrix scalar(const FieldRef& ctx, size_t n, uint16_t lambda);

    /// Builds a matrix from rows given as code vectors; all rows must have
    /// equal length.
    static Matrix from_rows(const FieldRef& ctx, const std::vector<std::vector<uint16_t>>& rows,
                            size_t cols);

    const FieldRef& ctx() const { return ctx_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    uint16_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    void set(size_t r, size_t c, uint16_t v) { a_[r * cols_ + c] = v; }

    const std::vector<uint16_t>& entries() const { return a_; }
    std::vector<uint16_t> row(size_t r) const;

    /// Reduced row echelon form by Gaussian elimination with leftmost-pivot,
    /// first-nonzero-row selection: deterministic in exact arithmetic.
    RrefResult rref() const;

    size_t rank() const { return rref().rank; }
    bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

    Matrix operator*(const Matrix& rhs) const;

    /// Inverse of a square full-rank matrix; Singular otherwise.
    Matrix inverse() const;

    /// Entry-wise image under a field automorphism; preserves rank.
    Matrix applied(const FieldAutomorphism& phi) const;

    /// Vertical concatenation; column counts must match.
    Matrix stacked(const Matrix& below) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    /// Total order: shape first, then row-major lexicographic on codes.
    friend std::strong_ordering operator<=>(const Matrix& a, const Matrix& b);

private:
    void require_same_field(const Matrix& other) const;

    FieldRef ctx_;
    size_t rows_;
    size_t cols_;
    std::vector<uint16_t> a_;
};

} // namespace flagcodes

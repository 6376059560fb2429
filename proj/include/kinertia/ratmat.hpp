#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kinertia/rational.hpp"

namespace kinertia {

// Dense exact matrix over Q, row-major. Sized for the small exact linear
// algebra this library needs (ranks, solves, inverses up to ~100x100).
class RatMat {
public:
    RatMat() = default;
    RatMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    static RatMat identity(size_t n);
    static RatMat from_rows(const std::vector<std::vector<Rational>>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rational& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    RatMat operator*(const RatMat& o) const;
    RatMat operator+(const RatMat& o) const;
    RatMat operator-(const RatMat& o) const;
    RatMat operator*(const Rational& s) const;
    bool operator==(const RatMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    RatMat transpose() const;
    bool is_zero() const;
    bool is_identity() const;

    // Gauss-Jordan to reduced row echelon form, in place; returns the rank.
    size_t rref();
    size_t rank() const;

    // Exact solve of A X = B. Returns nullopt when inconsistent; with a
    // rank-deficient A the free variables of the particular solution are 0.
    std::optional<RatMat> solve(const RatMat& rhs) const;
    std::optional<RatMat> inverse() const;

    // Columns form a basis of the kernel (empty matrix for injective A).
    RatMat nullspace() const;

    // Horizontal / vertical concatenation.
    static RatMat hcat(const RatMat& a, const RatMat& b);
    static RatMat vcat(const RatMat& a, const RatMat& b);

    std::vector<Rational> apply(const std::vector<Rational>& v) const;
    RatMat column(size_t j) const;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

}  // namespace kinertia

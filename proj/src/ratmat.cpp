#include "kinertia/ratmat.hpp"

#include <stdexcept>

namespace kinertia {

RatMat RatMat::identity(size_t n) {
    RatMat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat RatMat::from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return RatMat();
    RatMat m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged rows");
        for (size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

RatMat RatMat::operator*(const RatMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    RatMat r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Rational& x = at(i, k);
            if (x == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                if (o.at(k, j) == 0) continue;
                r.at(i, j) += x * o.at(k, j);
            }
        }
    return r;
}

RatMat RatMat::operator+(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    RatMat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

RatMat RatMat::operator-(const RatMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
    RatMat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

RatMat RatMat::operator*(const Rational& s) const {
    RatMat r = *this;
    for (auto& x : r.a_) x *= s;
    return r;
}

RatMat RatMat::transpose() const {
    RatMat r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool RatMat::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

bool RatMat::is_identity() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

size_t RatMat::rref() {
    size_t rank = 0;
    for (size_t col = 0; col < cols_ && rank < rows_; ++col) {
        size_t pivot = rank;
        while (pivot < rows_ && at(pivot, col) == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != rank)
            for (size_t j = 0; j < cols_; ++j) std::swap(at(pivot, j), at(rank, j));
        Rational inv = Rational(1) / at(rank, col);
        for (size_t j = col; j < cols_; ++j) at(rank, j) *= inv;
        for (size_t i = 0; i < rows_; ++i) {
            if (i == rank || at(i, col) == 0) continue;
            Rational f = at(i, col);
            for (size_t j = col; j < cols_; ++j) at(i, j) -= f * at(rank, j);
        }
        ++rank;
    }
    return rank;
}

size_t RatMat::rank() const {
    RatMat copy = *this;
    return copy.rref();
}

std::optional<RatMat> RatMat::solve(const RatMat& rhs) const {
    if (rhs.rows_ != rows_) throw std::invalid_argument("solve: rhs shape mismatch");
    RatMat aug = hcat(*this, rhs);
    aug.rref();
    RatMat x(cols_, rhs.cols_);
    std::vector<long> pivot_col(rows_, -1);
    for (size_t i = 0; i < rows_; ++i) {
        size_t j = 0;
        while (j < cols_ && aug.at(i, j) == 0) ++j;
        if (j == cols_) {
            // Zero row on the A side: inconsistent if the rhs side is not.
            for (size_t k = 0; k < rhs.cols_; ++k)
                if (aug.at(i, cols_ + k) != 0) return std::nullopt;
        } else {
            pivot_col[i] = static_cast<long>(j);
        }
    }
    for (size_t i = 0; i < rows_; ++i) {
        if (pivot_col[i] < 0) continue;
        for (size_t k = 0; k < rhs.cols_; ++k)
            x.at(static_cast<size_t>(pivot_col[i]), k) = aug.at(i, cols_ + k);
    }
    return x;
}

std::optional<RatMat> RatMat::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    RatMat aug = hcat(*this, identity(rows_));
    size_t rank = aug.rref();
    if (rank != rows_) return std::nullopt;
    // rref of [A|I] with full rank is [I|A^-1].
    for (size_t i = 0; i < rows_; ++i)
        if (aug.at(i, i) != 1) return std::nullopt;
    RatMat inv(rows_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < rows_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

RatMat RatMat::nullspace() const {
    RatMat r = *this;
    r.rref();
    // After rref, the first nonzero entry of each nonzero row marks a pivot column.
    std::vector<long> pivot_of_col(cols_, -1);
    for (size_t i = 0; i < rows_; ++i) {
        size_t j = 0;
        while (j < cols_ && r.at(i, j) == 0) ++j;
        if (j < cols_) pivot_of_col[j] = static_cast<long>(i);
    }
    std::vector<size_t> free_cols;
    for (size_t col = 0; col < cols_; ++col)
        if (pivot_of_col[col] < 0) free_cols.push_back(col);
    RatMat basis(cols_, free_cols.size());
    for (size_t k = 0; k < free_cols.size(); ++k) {
        size_t fc = free_cols[k];
        basis.at(fc, k) = 1;
        for (size_t col = 0; col < cols_; ++col) {
            long pr = pivot_of_col[col];
            if (pr >= 0) basis.at(col, k) = -r.at(static_cast<size_t>(pr), fc);
        }
    }
    return basis;
}

RatMat RatMat::hcat(const RatMat& a, const RatMat& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("hcat row mismatch");
    RatMat r(a.rows_, a.cols_ + b.cols_);
    for (size_t i = 0; i < a.rows_; ++i) {
        for (size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (size_t j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
    }
    return r;
}

RatMat RatMat::vcat(const RatMat& a, const RatMat& b) {
    if (a.cols_ != b.cols_) throw std::invalid_argument("vcat column mismatch");
    RatMat r(a.rows_ + b.rows_, a.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (size_t i = 0; i < b.rows_; ++i)
        for (size_t j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
    return r;
}

std::vector<Rational> RatMat::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: size mismatch");
    std::vector<Rational> out(rows_, Rational(0));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && v[j] != 0) out[i] += at(i, j) * v[j];
    return out;
}

RatMat RatMat::column(size_t j) const {
    RatMat c(rows_, 1);
    for (size_t i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
    return c;
}

}  // namespace kinertia

#pragma once

#include <vector>

#include "taut/rational.hpp"

namespace taut {

/// Small dense matrix over Q.
class RatMatrix {
  public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
        if (x.cols_ != y.rows_) throw error("RatMatrix: size mismatch in product");
        RatMatrix r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                if (x(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += x(i, k) * y(k, j);
            }
        return r;
    }
    friend RatMatrix operator+(RatMatrix x, const RatMatrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw error("RatMatrix: size mismatch");
        for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] += y.a_[i];
        return x;
    }
    friend RatMatrix operator-(RatMatrix x, const RatMatrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw error("RatMatrix: size mismatch");
        for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] -= y.a_[i];
        return x;
    }
    RatMatrix scaled(const Rational& c) const {
        RatMatrix r = *this;
        for (auto& x : r.a_) x *= c;
        return r;
    }
    friend bool operator==(const RatMatrix& x, const RatMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    Rational trace() const {
        Rational t(0);
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    /// Gauss-Jordan inverse; throws on singular input.
    RatMatrix inverse() const;

    static RatMatrix commutator(const RatMatrix& x, const RatMatrix& y) {
        return x * y - y * x;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

inline RatMatrix RatMatrix::inverse() const {
    if (rows_ != cols_) throw error("RatMatrix: inverse of non-square matrix");
    std::size_t n = rows_;
    RatMatrix a = *this, inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw error("RatMatrix: singular matrix");
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(a(col, j), a(pivot, j));
            std::swap(inv(col, j), inv(pivot, j));
        }
        Rational d = a(col, col).inv();
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) *= d;
            inv(col, j) *= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col).is_zero()) continue;
            Rational f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

}  // namespace taut

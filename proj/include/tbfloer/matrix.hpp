#pragma once

#include "tbfloer/integers.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace tbfloer {

// Dense matrix over arbitrary-precision integers. Row/column elementary
// operations are the primitives the Smith normal form works with.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t r, std::size_t c) {
        check(r, c);
        return a_[r * cols_ + c];
    }
    const Int& operator()(std::size_t r, std::size_t c) const {
        check(r, c);
        return a_[r * cols_ + c];
    }

    bool is_zero() const {
        for (const Int& x : a_)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
        IntMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& x = (*this)(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const Int& y = o(k, j);
                    if (y != 0) r(i, j) += x * y;
                }
            }
        return r;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
    }
    void negate_col(std::size_t j) {
        for (std::size_t r = 0; r < rows_; ++r) (*this)(r, j) = -(*this)(r, j);
    }
    // row[dst] += f * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t c = 0; c < cols_; ++c) {
            const Int& s = (*this)(src, c);
            if (s != 0) (*this)(dst, c) += f * s;
        }
    }
    // col[dst] += f * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t r = 0; r < rows_; ++r) {
            const Int& s = (*this)(r, src);
            if (s != 0) (*this)(r, dst) += f * s;
        }
    }

private:
    void check(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw std::out_of_range("IntMatrix: index out of range");
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// Exact determinant by the Bareiss fraction-free elimination.
inline Int determinant(IntMatrix a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t piv = k;
            while (piv < n && a(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

}  // namespace tbfloer

#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lefschetz::kernel {

// Dense row-major matrix over an exact ring or field. Entry types must
// provide +, -, *, == and is_zero(); elimination routines additionally
// require exact division.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), e_(rows * cols, fill) {}

    static Matrix identity(std::size_t n)
        requires std::constructible_from<T, int>
    {
        Matrix m(n, n, T(0));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("Matrix: shape mismatch in sum");
        Matrix c = a;
        for (std::size_t i = 0; i < c.e_.size(); ++i) c.e_[i] += b.e_[i];
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> e_;
};

// Reduced row echelon form in place. Pivots are chosen as the first row with a
// nonzero entry, scanning columns left to right, so the result is deterministic.
// Returns the pivot column indices in increasing order.
template <typename T>
std::vector<std::size_t> rref_in_place(Matrix<T>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        m.swap_rows(row, sel);
        const T inv_pivot = m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) / inv_pivot;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const T factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) = m(i, j) - factor * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Exact rank over the entry field.
template <typename T>
std::size_t rank(Matrix<T> m) {
    return rref_in_place(m).size();
}

// Basis of the right null space; every returned v satisfies Mv = 0 exactly.
// `one` supplies the multiplicative identity of the entry field.
template <typename T>
std::vector<std::vector<T>> kernel_basis(Matrix<T> m, const T& one) {
    const std::size_t n = m.cols();
    const std::vector<std::size_t> pivots = rref_in_place(m);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<std::vector<T>> basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<T> v(n, one - one);
        v[free_col] = one;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = (one - one) - m(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <typename T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& m)
    requires std::constructible_from<T, int>
{
    return kernel_basis(m, T(1));
}

// Exact determinant by fraction-free Bareiss elimination.
template <typename T>
T det_bareiss(Matrix<T> m, const T& one) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return one;
    bool negate = false;
    T prev = one;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t sel = k;
        while (sel < n && m(sel, k).is_zero()) ++sel;
        if (sel == n) return one - one;
        if (sel != k) {
            m.swap_rows(k, sel);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = one - one;
        }
        prev = m(k, k);
    }
    T d = m(n - 1, n - 1);
    return negate ? -d : d;
}

template <typename T>
T det_bareiss(const Matrix<T>& m)
    requires std::constructible_from<T, int>
{
    return det_bareiss(m, T(1));
}

// Exact determinant by Laplace expansion with memoization on column subsets
// (n 2^n ring operations instead of n!). Needs only ring operations, so it
// also covers polynomial entries.
template <typename T>
T det_cofactor(const Matrix<T>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) throw std::invalid_argument("det_cofactor: empty matrix");
    if (n > 24) throw std::invalid_argument("det_cofactor: matrix too large for subset expansion");
    const T zero = m(0, 0) - m(0, 0);
    if (n == 1) return m(0, 0);
    // minors[mask] = det of the top popcount(mask) rows on the columns in mask
    std::vector<T> minors(std::size_t{1} << n, zero);
    for (std::size_t j = 0; j < n; ++j) minors[std::size_t{1} << j] = m(0, j);
    std::vector<std::size_t> order;
    order.reserve((std::size_t{1} << n) - n - 1);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask)
        if (__builtin_popcountll(mask) >= 2) order.push_back(mask);
    std::sort(order.begin(), order.end(), [](std::size_t a, std::size_t b) {
        return __builtin_popcountll(a) < __builtin_popcountll(b);
    });
    for (std::size_t mask : order) {
        const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask)) - 1;
        std::optional<T> acc;
        std::size_t pos = 0;  // position of column j inside mask
        for (std::size_t j = 0; j < n; ++j) {
            if (!(mask & (std::size_t{1} << j))) continue;
            if (!m(row, j).is_zero()) {
                T term = m(row, j) * minors[mask & ~(std::size_t{1} << j)];
                if ((row + pos) % 2 == 1) term = -term;
                acc = acc ? *acc + std::move(term) : std::move(term);
            }
            ++pos;
        }
        if (acc) minors[mask] = std::move(*acc);
    }
    return minors[(std::size_t{1} << n) - 1];
}

// Solves A X = B exactly for square A; nullopt when A is singular.
template <typename T>
std::optional<Matrix<T>> solve(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != a.cols() || a.rows() != b.rows())
        throw std::invalid_argument("solve: shape mismatch");
    const std::size_t n = a.rows();
    Matrix<T> aug(n, n + b.cols());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug(i, n + j) = b(i, j);
    }
    const std::vector<std::size_t> pivots = rref_in_place(aug);
    // A is invertible exactly when the pivots are the first n columns
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Matrix<T> x(n, b.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) = aug(i, n + j);
    return x;
}

}  // namespace lefschetz::kernel

#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ultraspec/rational.hpp"
#include "ultraspec/vectors.hpp"

namespace ultraspec {

// Dense matrix over the rationals. Row-major, exact arithmetic.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows, std::vector<Rational>(cols, Rational(0))) {}

    explicit Matrix(std::vector<std::vector<Rational>> rows) : a_(std::move(rows)) {
        rows_ = a_.size();
        cols_ = rows_ ? a_[0].size() : 0;
        for (const auto& r : a_)
            if (r.size() != cols_) throw std::invalid_argument("ragged matrix rows");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return a_.at(i).at(j); }
    const Rational& at(std::size_t i, std::size_t j) const { return a_.at(i).at(j); }

    const std::vector<std::vector<Rational>>& data() const { return a_; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    Matrix operator+(const Matrix& o) const {
        require_shape(o);
        Matrix m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = a_[i][j] + o.a_[i][j];
        return m;
    }

    Matrix operator-(const Matrix& o) const {
        require_shape(o);
        Matrix m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = a_[i][j] - o.a_[i][j];
        return m;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
        Matrix m(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                if (a_[i][k].is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    m.at(i, j) += a_[i][k] * o.a_[k][j];
            }
        return m;
    }

    Vec apply(const Vec& x) const {
        if (x.size() != cols_) throw std::invalid_argument("matrix shape mismatch");
        Vec y(rows_, Rational(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!a_[i][j].is_zero() && !x[j].is_zero()) y[i] += a_[i][j] * x[j];
        return y;
    }

    Matrix scaled(const Rational& c) const {
        Matrix m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = c * a_[i][j];
        return m;
    }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = a_[i][j];
        return m;
    }

    Rational trace() const {
        if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
        Rational t = 0;
        for (std::size_t i = 0; i < rows_; ++i) t += a_[i][i];
        return t;
    }

private:
    void require_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<std::vector<Rational>> a_;
};

/**
 * Rank by Bareiss fraction-free elimination. Rows are scaled to
 * integers first (rank-preserving); pivoting is deterministic — the
 * first row with a nonzero entry in the current column. Magnitude
 * pivoting would be meaningless here: arithmetic is exact, and the
 * archimedean notion of "large" carries no p-adic significance.
 */
inline std::size_t bareiss_rank(const Matrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    if (R == 0 || C == 0) return 0;

    // Clear denominators row by row.
    std::vector<std::vector<Int>> a(R, std::vector<Int>(C));
    for (std::size_t i = 0; i < R; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < C; ++j) l = boost::multiprecision::lcm(l, m.at(i, j).denominator());
        for (std::size_t j = 0; j < C; ++j) {
            const Rational v = m.at(i, j) * Rational(l);
            a[i][j] = v.numerator(); // denominator is 1 by construction
        }
    }

    Int prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < C && rank < R; ++col) {
        // First nonzero entry in this column at or below the current row.
        std::size_t piv = rank;
        while (piv < R && a[piv][col] == 0) ++piv;
        if (piv == R) continue; // column already eliminated
        if (piv != rank) std::swap(a[piv], a[rank]);

        for (std::size_t i = rank + 1; i < R; ++i) {
            for (std::size_t j = col + 1; j < C; ++j)
                a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

/**
 * Reduced row echelon form. Returns the reduced matrix together with
 * the pivot column of each nonzero row. Same deterministic pivot rule
 * as bareiss_rank.
 */
inline std::pair<Matrix, std::vector<std::size_t>> rref(const Matrix& m) {
    Matrix r = m;
    const std::size_t R = r.rows(), C = r.cols();
    std::vector<std::size_t> pivots;

    std::size_t row = 0;
    for (std::size_t col = 0; col < C && row < R; ++col) {
        std::size_t piv = row;
        while (piv < R && r.at(piv, col).is_zero()) ++piv;
        if (piv == R) continue;
        if (piv != row)
            for (std::size_t j = 0; j < C; ++j) std::swap(r.at(piv, j), r.at(row, j));

        const Rational inv = r.at(row, col).reciprocal();
        for (std::size_t j = col; j < C; ++j) r.at(row, j) = r.at(row, j) * inv;

        for (std::size_t i = 0; i < R; ++i) {
            if (i == row || r.at(i, col).is_zero()) continue;
            const Rational f = r.at(i, col);
            for (std::size_t j = col; j < C; ++j) r.at(i, j) = r.at(i, j) - f * r.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(r), std::move(pivots)};
}

/**
 * Basis of the right kernel {x : Mx = 0}, one vector per free column,
 * in increasing free-column order. Empty when the kernel is trivial.
 */
inline std::vector<Vec> kernel_basis(const Matrix& m) {
    const auto [r, pivots] = rref(m);
    const std::size_t C = m.cols();

    std::vector<bool> is_pivot(C, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (std::size_t free = 0; free < C; ++free) {
        if (is_pivot[free]) continue;
        Vec x(C, Rational(0));
        x[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            x[pivots[k]] = -r.at(k, free);
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace ultraspec

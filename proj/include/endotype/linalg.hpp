#pragma once

#include "rational.hpp"

#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace endotype {

inline bool isZero(const Rational& x) { return x == 0; }
inline bool isZero(const GaussianRational& x) { return x.isZero(); }

/// Dense matrix over an exact field (Rational or GaussianRational).
template <class F>
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<F> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = F(1);
        return m;
    }

    F& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const F& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols != o.rows) throw std::logic_error("Matrix: shape mismatch");
        Matrix r(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                const F& x = at(i, k);
                if (isZero(x)) continue;
                for (int j = 0; j < o.cols; ++j) {
                    if (isZero(o.at(k, j))) continue;
                    r.at(i, j) += x * o.at(k, j);
                }
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        Matrix r = *this;
        for (size_t k = 0; k < a.size(); ++k) r.a[k] += o.a[k];
        return r;
    }

    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.a) x = -x;
        return r;
    }

    Matrix scaled(const F& c) const {
        Matrix r = *this;
        for (auto& x : r.a) x = x * c;
        return r;
    }

    Matrix transposed() const {
        Matrix r(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    bool isDiagonal() const {
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (i != j && !isZero(at(i, j))) return false;
        return true;
    }
};

using QMatrix = Matrix<Rational>;
using GMatrix = Matrix<GaussianRational>;

inline GMatrix conjugated(const GMatrix& m) {
    GMatrix r = m;
    for (auto& x : r.a) x = x.conj();
    return r;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
    if (m.rows != m.cols) throw std::logic_error("inverse: not square");
    int n = m.rows;
    Matrix<F> work = m, inv = Matrix<F>::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!isZero(work.at(r, col))) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::domain_error("inverse: singular matrix");
        for (int j = 0; j < n; ++j) {
            std::swap(work.at(piv, j), work.at(col, j));
            std::swap(inv.at(piv, j), inv.at(col, j));
        }
        F d = work.at(col, col);
        for (int j = 0; j < n; ++j) {
            work.at(col, j) = work.at(col, j) / d;
            inv.at(col, j) = inv.at(col, j) / d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || isZero(work.at(r, col))) continue;
            F f = work.at(r, col);
            for (int j = 0; j < n; ++j) {
                work.at(r, j) -= f * work.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

/// Row echelon reduction in place; returns pivot column list.
template <class F>
std::vector<int> rowReduce(Matrix<F>& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int piv = -1;
        for (int r = row; r < m.rows; ++r)
            if (!isZero(m.at(r, col))) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
        F d = m.at(row, col);
        for (int j = 0; j < m.cols; ++j) m.at(row, j) = m.at(row, j) / d;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || isZero(m.at(r, col))) continue;
            F f = m.at(r, col);
            for (int j = 0; j < m.cols; ++j) m.at(r, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
int rank(Matrix<F> m) {
    return static_cast<int>(rowReduce(m).size());
}

/// Basis of the null space {x : Mx = 0}, one vector per free column.
template <class F>
std::vector<std::vector<F>> kernelBasis(Matrix<F> m) {
    std::vector<int> pivots = rowReduce(m);
    std::vector<bool> isPivot(m.cols, false);
    for (int c : pivots) isPivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (isPivot[free]) continue;
        std::vector<F> v(m.cols, F(0));
        v[free] = F(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

struct Signature {
    int positives = 0;
    int negatives = 0;
    int rank() const { return positives + negatives; }
    friend bool operator==(const Signature&, const Signature&) = default;
};

/// Exact signature of a symmetric rational matrix by symmetric Gaussian
/// elimination (congruence transformations only, no floating point).
inline Signature signature(QMatrix g) {
    if (g.rows != g.cols) throw std::invalid_argument("signature: not square");
    int n = g.rows;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (g.at(i, j) != g.at(j, i)) throw std::invalid_argument("signature: not symmetric");

    auto swapRowCol = [&](int x, int y) {
        for (int j = 0; j < n; ++j) std::swap(g.at(x, j), g.at(y, j));
        for (int i = 0; i < n; ++i) std::swap(g.at(i, x), g.at(i, y));
    };
    // x += y as a basis change, applied on both sides.
    auto addRowCol = [&](int x, int y) {
        for (int j = 0; j < n; ++j) g.at(x, j) += g.at(y, j);
        for (int i = 0; i < n; ++i) g.at(i, x) += g.at(i, y);
    };

    Signature sig;
    for (int k = 0; k < n; ++k) {
        if (g.at(k, k) == 0) {
            int diag = -1;
            for (int r = k + 1; r < n; ++r)
                if (g.at(r, r) != 0) {
                    diag = r;
                    break;
                }
            if (diag >= 0) {
                swapRowCol(k, diag);
            } else {
                int oi = -1, oj = -1;
                for (int i = k; i < n && oi < 0; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if (g.at(i, j) != 0) {
                            oi = i;
                            oj = j;
                            break;
                        }
                if (oi < 0) break; // trailing block is zero: radical
                addRowCol(oi, oj); // makes g[oi][oi] = 2*g[oi][oj] != 0
                if (oi != k) swapRowCol(k, oi);
            }
        }
        Rational pivot = g.at(k, k);
        if (pivot > 0)
            ++sig.positives;
        else
            ++sig.negatives;
        for (int i = k + 1; i < n; ++i) {
            if (g.at(i, k) == 0) continue;
            Rational f = g.at(i, k) / pivot;
            for (int j = 0; j < n; ++j) g.at(i, j) -= f * g.at(k, j);
            for (int j = 0; j < n; ++j) g.at(j, i) -= f * g.at(j, k);
        }
    }
    return sig;
}

} // namespace endotype

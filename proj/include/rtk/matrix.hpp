#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rtk/scalar.hpp"

namespace rtk {

/// Dense matrix over an exact field scalar (Rational or QuadExt).
/// Row-major, desk-scale; every algorithm below is fraction-exact.
template <typename S>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
        data_.resize(static_cast<std::size_t>(rows) * cols);
    }

    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = S(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    S& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const S& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const {
        for (const S& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_symmetric() const {
        if (!is_square()) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }
    bool is_antisymmetric() const {
        if (!is_square()) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i; j < cols_; ++j)
                if (at(i, j) != -at(j, i)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    S trace() const {
        if (!is_square()) throw std::invalid_argument("trace: matrix not square");
        S t{};
        for (int i = 0; i < rows_; ++i) t += at(i, i);
        return t;
    }

    Matrix operator-() const {
        Matrix r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = -data_[k];
        return r;
    }
    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o, "+");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o, "-");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    Matrix& operator*=(const S& c) {
        for (S& x : data_) x *= c;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { a += b; return a; }
    friend Matrix operator-(Matrix a, const Matrix& b) { a -= b; return a; }
    friend Matrix operator*(Matrix a, const S& c) { a *= c; return a; }
    friend Matrix operator*(const S& c, Matrix a) { a *= c; return a; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix*: dimension mismatch");
        Matrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const S& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    if (b.at(k, j).is_zero()) continue;
                    r.at(i, j) += aik * b.at(k, j);
                }
            }
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::vector<S> col(int j) const {
        std::vector<S> v(rows_);
        for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
        return v;
    }
    std::vector<S> row(int i) const {
        std::vector<S> v(cols_);
        for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
        return v;
    }

    Matrix block(int i0, int j0, int r, int c) const {
        Matrix b(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) b.at(i, j) = at(i0 + i, j0 + j);
        return b;
    }
    void set_block(int i0, int j0, const Matrix& b) {
        for (int i = 0; i < b.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j) at(i0 + i, j0 + j) = b.at(i, j);
    }

    static Matrix block_diag(const Matrix& a, const Matrix& b) {
        Matrix r(a.rows_ + b.rows_, a.cols_ + b.cols_);
        r.set_block(0, 0, a);
        r.set_block(a.rows_, a.cols_, b);
        return r;
    }

    /// Flattens row-major into a length rows*cols vector.
    std::vector<S> vectorize() const { return data_; }

    static Matrix from_vector(const std::vector<S>& v, int rows, int cols) {
        if (static_cast<std::size_t>(rows) * cols != v.size())
            throw std::invalid_argument("Matrix::from_vector: size mismatch");
        Matrix m(rows, cols);
        m.data_ = v;
        return m;
    }

private:
    int rows_, cols_;
    std::vector<S> data_;

    void check_same_shape(const Matrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument(std::string("Matrix") + op + ": shape mismatch");
    }
};

template <typename S>
std::vector<S> mat_vec(const Matrix<S>& m, const std::vector<S>& v) {
    if (m.cols() != static_cast<int>(v.size())) throw std::invalid_argument("mat_vec: dimension mismatch");
    std::vector<S> r(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        S acc{};
        for (int j = 0; j < m.cols(); ++j) acc += m.at(i, j) * v[j];
        r[i] = acc;
    }
    return r;
}

template <typename S>
std::vector<S> vec_add(std::vector<S> a, const std::vector<S>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

template <typename S>
std::vector<S> vec_scale(std::vector<S> a, const S& c) {
    for (S& x : a) x *= c;
    return a;
}

template <typename S>
bool vec_is_zero(const std::vector<S>& a) {
    for (const S& x : a)
        if (!x.is_zero()) return false;
    return true;
}

/// In-place reduced row echelon form. Returns the pivot column of each
/// pivot row, in order.
template <typename S>
std::vector<int> rref(Matrix<S>& m) {
    std::vector<int> pivots;
    int prow = 0;
    for (int pcol = 0; pcol < m.cols() && prow < m.rows(); ++pcol) {
        int sel = -1;
        for (int i = prow; i < m.rows(); ++i)
            if (!m.at(i, pcol).is_zero()) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != prow)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(prow, j));
        S inv = S(1) / m.at(prow, pcol);
        for (int j = pcol; j < m.cols(); ++j) m.at(prow, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == prow || m.at(i, pcol).is_zero()) continue;
            S f = m.at(i, pcol);
            for (int j = pcol; j < m.cols(); ++j) m.at(i, j) -= f * m.at(prow, j);
        }
        pivots.push_back(pcol);
        ++prow;
    }
    return pivots;
}

template <typename S>
int rank(Matrix<S> m) {
    return static_cast<int>(rref(m).size());
}

/// Basis of { x : m x = 0 }, one vector per free column.
template <typename S>
std::vector<std::vector<S>> nullspace(Matrix<S> m) {
    int n = m.cols();
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<S>> basis;
    for (int j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        std::vector<S> v(n);
        v[j] = S(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), j);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// One solution of A x = b, or nullopt when inconsistent.
template <typename S>
std::optional<std::vector<S>> solve(const Matrix<S>& a, const std::vector<S>& b) {
    if (a.rows() != static_cast<int>(b.size())) throw std::invalid_argument("solve: dimension mismatch");
    Matrix<S> aug(a.rows(), a.cols() + 1);
    aug.set_block(0, 0, a);
    for (int i = 0; i < a.rows(); ++i) aug.at(i, a.cols()) = b[i];
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // row [0.. | 1]
    std::vector<S> x(a.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), a.cols());
    return x;
}

template <typename S>
Matrix<S> inverse(const Matrix<S>& a) {
    if (!a.is_square()) throw std::invalid_argument("inverse: matrix not square");
    int n = a.rows();
    Matrix<S> aug(n, 2 * n);
    aug.set_block(0, 0, a);
    aug.set_block(0, n, Matrix<S>::identity(n));
    std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) < n || (n > 0 && pivots[n - 1] != n - 1))
        throw std::domain_error("inverse: singular matrix");
    return aug.block(0, n, n, n);
}

/// Incremental exact span: rows are kept in echelon form, and candidate
/// vectors either extend the span or are recognized as dependent. Also
/// answers coordinate queries against the originally inserted vectors.
template <typename S>
class Span {
public:
    explicit Span(int ambient) : ambient_(ambient) {}

    int dim() const { return static_cast<int>(echelon_.size()); }
    int ambient() const { return ambient_; }

    /// Adds v to the span. Returns true when the dimension grew.
    bool add(const std::vector<S>& v) {
        std::vector<S> r = reduce(v);
        int lead = leading_index(r);
        if (lead < 0) return false;
        S inv = S(1) / r[lead];
        for (S& x : r) x *= inv;
        // keep echelon rows sorted by leading index
        std::size_t pos = 0;
        while (pos < lead_.size() && lead_[pos] < lead) ++pos;
        echelon_.insert(echelon_.begin() + pos, std::move(r));
        lead_.insert(lead_.begin() + pos, lead);
        return true;
    }

    bool contains(const std::vector<S>& v) const { return vec_is_zero(reduce(v)); }

    const std::vector<std::vector<S>>& echelon_basis() const { return echelon_; }

private:
    int ambient_;
    std::vector<std::vector<S>> echelon_;
    std::vector<int> lead_;

    std::vector<S> reduce(std::vector<S> v) const {
        if (static_cast<int>(v.size()) != ambient_)
            throw std::invalid_argument("Span: wrong vector length");
        for (std::size_t r = 0; r < echelon_.size(); ++r) {
            const S& c = v[lead_[r]];
            if (c.is_zero()) continue;
            S f = c;  // echelon rows are normalized to leading 1
            for (int j = 0; j < ambient_; ++j) v[j] -= f * echelon_[r][j];
        }
        return v;
    }

    static int leading_index(const std::vector<S>& v) {
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) return static_cast<int>(j);
        return -1;
    }
};

/// Coordinates of vectors against a fixed independent spanning list.
/// Throws at construction if the given rows are dependent.
template <typename S>
class CoordinateSolver {
public:
    explicit CoordinateSolver(const std::vector<std::vector<S>>& basis_rows) {
        k_ = static_cast<int>(basis_rows.size());
        n_ = k_ ? static_cast<int>(basis_rows[0].size()) : 0;
        if (k_ == 0) return;
        // solve x^T B = v^T via the transposed system B^T x = v
        bt_ = Matrix<S>(n_, k_);
        for (int a = 0; a < k_; ++a) {
            if (static_cast<int>(basis_rows[a].size()) != n_)
                throw std::invalid_argument("CoordinateSolver: ragged basis");
            for (int j = 0; j < n_; ++j) bt_.at(j, a) = basis_rows[a][j];
        }
        if (rank(bt_) != k_) throw std::invalid_argument("CoordinateSolver: dependent basis");
    }

    int dim() const { return k_; }

    /// Coordinates of v in the basis, or nullopt when v is outside the span.
    std::optional<std::vector<S>> coords(const std::vector<S>& v) const {
        if (k_ == 0) return vec_is_zero(v) ? std::make_optional(std::vector<S>{}) : std::nullopt;
        return solve(bt_, v);
    }

private:
    int k_ = 0, n_ = 0;
    Matrix<S> bt_;
};

/// Signature (p, q) of a symmetric matrix by exact congruence
/// diagonalization: symmetric pivoting plus the add-row trick when the
/// whole remaining diagonal vanishes. Degenerate directions are skipped.
template <typename S>
std::pair<int, int> signature(Matrix<S> m) {
    if (!m.is_symmetric()) throw std::invalid_argument("signature: matrix not symmetric");
    int n = m.rows();
    int p = 0, q = 0;
    auto add_row_col = [&](int dst, int src) {
        for (int j = 0; j < n; ++j) m.at(dst, j) += m.at(src, j);
        for (int i = 0; i < n; ++i) m.at(i, dst) += m.at(i, src);
    };
    auto swap_row_col = [&](int a, int b) {
        for (int j = 0; j < n; ++j) std::swap(m.at(a, j), m.at(b, j));
        for (int i = 0; i < n; ++i) std::swap(m.at(i, a), m.at(i, b));
    };
    for (int k = 0; k < n; ++k) {
        if (m.at(k, k).is_zero()) {
            int sel = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m.at(i, i).is_zero()) { sel = i; break; }
            if (sel >= 0) {
                swap_row_col(k, sel);
            } else {
                int j = -1;
                for (int c = k + 1; c < n; ++c)
                    if (!m.at(k, c).is_zero()) { j = c; break; }
                if (j < 0) continue;  // row/col k entirely zero from k on
                add_row_col(k, j);    // diagonal becomes 2*m(k,j) != 0
            }
        }
        const S pivot = m.at(k, k);
        int s = pivot.sign();
        if (s > 0) ++p; else ++q;
        for (int i = k + 1; i < n; ++i) {
            if (m.at(i, k).is_zero()) continue;
            S f = m.at(i, k) / pivot;
            for (int j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
            for (int j = k; j < n; ++j) m.at(j, i) -= f * m.at(j, k);
        }
    }
    return {p, q};
}

}  // namespace rtk

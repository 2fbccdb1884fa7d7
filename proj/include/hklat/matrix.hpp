#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hklat/errors.hpp"
#include "hklat/rational.hpp"

namespace hklat {

template <class K>
using Vec = std::vector<K>;

/// Dense row-major matrix over an exact scalar field (Rat or GaussRat).
template <class K>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    Mat(int rows, int cols, std::vector<K> entries) : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != static_cast<size_t>(rows_) * cols_)
            throw DimensionMismatch("Mat: entry count does not match rows*cols");
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = K(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    K& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const K& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const {
        for (const K& x : a_)
            if (!is_zero_scalar(x)) return false;
        return true;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    Mat operator-() const {
        Mat r(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = -a_[k];
        return r;
    }
    Mat& operator+=(const Mat& o) {
        check_same_shape(o);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        check_same_shape(o);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("Mat: incompatible product shapes");
        Mat r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const K& aik = a.at(i, k);
                if (is_zero_scalar(aik)) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const K& bkj = b.at(k, j);
                    if (!is_zero_scalar(bkj)) r.at(i, j) += aik * bkj;
                }
            }
        return r;
    }

    Mat scaled(const K& c) const {
        Mat r(rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * c;
        return r;
    }

    Mat transposed() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    Vec<K> apply(const Vec<K>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("Mat: vector length mismatch");
        Vec<K> r(rows_, K(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!is_zero_scalar(at(i, j))) r[i] += at(i, j) * v[j];
        return r;
    }

private:
    static bool is_zero_scalar(const K& x) { return hklat::is_zero(x); }
    void check_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("Mat: shape mismatch");
    }

    int rows_, cols_;
    std::vector<K> a_;
};

/// Row-reduce in place to reduced row echelon form with deterministic pivoting
/// (first nonzero entry in column order). Returns the pivot columns.
template <class K>
std::vector<int> rref_inplace(Mat<K>& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i) {
            if (!is_zero(m.at(i, c))) { p = i; break; }
        }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        K inv = K(1) / m.at(r, c);
        for (int j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m.at(i, c))) continue;
            K f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Rank by ordinary exact Gaussian elimination.
template <class K>
int rank_gauss(Mat<K> m) {
    return static_cast<int>(rref_inplace(m).size());
}

/// Rank by fraction-free (Bareiss) elimination over the integers.
/// Rows are scaled by their denominator lcm first; scaling does not change rank.
int rank_bareiss(const Mat<Rat>& m);

/// Rank over the entry field. For rational matrices this dispatches to the
/// fraction-free strategy; Gaussian elimination is the documented fallback for
/// the extension field. Both strategies agree bit-identically (tested).
int rank(const Mat<Rat>& m);
int rank(const Mat<GaussRat>& m);

/// Basis of the right null space in canonical form: for each free column f the
/// basis vector has 1 at f and the negated reduced column entries at the pivots.
template <class K>
std::vector<Vec<K>> kernel_basis(Mat<K> m) {
    std::vector<int> pivots = rref_inplace(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Vec<K>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec<K> v(m.cols(), K(0));
        v[f] = K(1);
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.at(static_cast<int>(i), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Some exact solution of m x = b, or nullopt when b is outside the column
/// space (a normal return, not a fault). Free variables are set to zero.
template <class K>
std::optional<Vec<K>> solve(const Mat<K>& m, const Vec<K>& b) {
    if (static_cast<int>(b.size()) != m.rows()) throw DimensionMismatch("solve: rhs length mismatch");
    Mat<K> aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    std::vector<int> pivots = rref_inplace(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vec<K> x(m.cols(), K(0));
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(static_cast<int>(i), m.cols());
    return x;
}

/// Inverse of a square matrix; throws DegenerateForm when singular.
template <class K>
Mat<K> inverse(const Mat<K>& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse: matrix not square");
    int n = m.rows();
    Mat<K> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = K(1);
    }
    std::vector<int> pivots = rref_inplace(aug);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
        throw DegenerateForm("inverse: singular matrix");
    Mat<K> r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
    return r;
}

// Small vector helpers.
template <class K>
Vec<K> vec_add(const Vec<K>& a, const Vec<K>& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vec_add: length mismatch");
    Vec<K> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

template <class K>
Vec<K> vec_scale(const Vec<K>& a, const K& c) {
    Vec<K> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return r;
}

template <class K>
bool vec_is_zero(const Vec<K>& a) {
    for (const K& x : a)
        if (!is_zero(x)) return false;
    return true;
}

inline Vec<GaussRat> promote(const Vec<Rat>& v) {
    Vec<GaussRat> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = GaussRat(v[i]);
    return r;
}

inline Mat<GaussRat> promote(const Mat<Rat>& m) {
    Mat<GaussRat> r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = GaussRat(m.at(i, j));
    return r;
}

/// Signature (positive, negative, zero inertia counts) of a symmetric rational
/// matrix, by exact congruence diagonalization.
struct Signature {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};
Signature signature(const Mat<Rat>& gram);

}  // namespace hklat

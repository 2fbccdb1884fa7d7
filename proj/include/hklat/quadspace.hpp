#pragma once

#include <string>
#include <vector>

#include "hklat/matrix.hpp"

namespace hklat {

/// Rational quadratic space: a dimension and a symmetric nondegenerate Gram
/// matrix. Signature is not constrained; geometric presets carry their own
/// metadata.
class QuadSpace {
public:
    QuadSpace(Mat<Rat> gram, std::vector<std::string> labels = {});

    int dim() const { return gram_.rows(); }
    const Mat<Rat>& gram() const { return gram_; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// q(u, v) evaluated exactly.
    Rat form(const Vec<Rat>& u, const Vec<Rat>& v) const;
    /// q(v) := q(v, v).
    Rat form(const Vec<Rat>& v) const { return form(v, v); }

private:
    Mat<Rat> gram_;
    std::vector<std::string> labels_;
};

/// Extended Mukai space Q·alpha + H^2 + Q·beta on the fixed basis order
/// (alpha, e_1..e_b2, beta): alpha and beta are isotropic, orthogonal to H^2,
/// pair to q(alpha, beta) = -1, and the H^2 block carries the base form.
/// alpha has degree -2, H^2 degree 0, beta degree +2.
class MukaiSpace {
public:
    explicit MukaiSpace(QuadSpace base);

    int b2() const { return base_.dim(); }
    int dim() const { return total_.dim(); }
    const QuadSpace& base() const { return base_; }
    const QuadSpace& total() const { return total_; }

    int alpha_index() const { return 0; }
    int beta_index() const { return dim() - 1; }

    /// Degree of the k-th basis vector: -2, 0, ..., 0, +2.
    int degree(int k) const;

    Vec<Rat> alpha() const;
    Vec<Rat> beta() const;
    /// Embed H^2 coordinates (length b2) into the full space.
    Vec<Rat> embed(const Vec<Rat>& h2coords) const;
    template <class K>
    Vec<K> embed_as(const Vec<K>& h2coords) const {
        if (static_cast<int>(h2coords.size()) != b2())
            throw DimensionMismatch("MukaiSpace::embed: expected b2 coordinates");
        Vec<K> v(dim(), K(0));
        for (int j = 0; j < b2(); ++j) v[1 + j] = h2coords[j];
        return v;
    }
    /// H^2 part of a full vector.
    Vec<Rat> h2_part(const Vec<Rat>& v) const;

    /// True when the alpha and beta coordinates both vanish.
    bool in_h2(const Vec<Rat>& v) const;

private:
    QuadSpace base_;
    QuadSpace total_;
};

MukaiSpace make_mukai(const QuadSpace& base);

/// Lattice isometry of a Mukai space: M^T G M = G exactly, checked on
/// construction.
class Isometry {
public:
    Isometry(const MukaiSpace& space, Mat<Rat> matrix);

    const Mat<Rat>& matrix() const { return m_; }
    Vec<Rat> apply(const Vec<Rat>& v) const { return m_.apply(v); }
    Isometry compose(const Isometry& inner) const;

private:
    const MukaiSpace* space_;
    Mat<Rat> m_;
};

/// exp(e_omega) for omega in the H^2 block (full-space coordinates with zero
/// alpha/beta entries): alpha -> alpha + omega + (q(omega)/2) beta,
/// mu -> mu + q(omega, mu) beta, beta -> beta. The exponential is finite
/// because e_omega is nilpotent of order 3.
Isometry exp_cup(const MukaiSpace& space, const Vec<Rat>& omega);

/// Matrix of the grading operator h: diag(-2, 0, ..., 0, +2).
Mat<Rat> grading_matrix(const MukaiSpace& space);

/// Evaluate a symmetric bilinear form given by a rational Gram matrix on
/// vectors over a possibly larger scalar field.
template <class K>
K form_eval(const Mat<Rat>& gram, const Vec<K>& u, const Vec<K>& v) {
    if (static_cast<int>(u.size()) != gram.rows() || static_cast<int>(v.size()) != gram.cols())
        throw DimensionMismatch("form_eval: vector length mismatch");
    K acc(0);
    for (int i = 0; i < gram.rows(); ++i) {
        if (is_zero(u[i])) continue;
        K row(0);
        for (int j = 0; j < gram.cols(); ++j) {
            if (gram.at(i, j).is_zero() || is_zero(v[j])) continue;
            row += K(gram.at(i, j)) * v[j];
        }
        acc += u[i] * row;
    }
    return acc;
}

}  // namespace hklat

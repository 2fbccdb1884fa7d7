#pragma once

#include <map>
#include <vector>

#include "hklat/quadspace.hpp"

namespace hklat {

/// Exponent vector of a monomial: length = ambient dimension, entries >= 0.
using Exp = std::vector<int>;

/// Element of Sym^n of an N-dimensional space, in the exponent-vector monomial
/// basis. No explicit zero coefficients are stored. A monomial is identified
/// with the pure tensor carrying each basis vector with its multiplicity; all
/// multiplicity conventions below follow from that identification.
template <class K>
class SymVec {
public:
    SymVec(int dim, int n) : dim_(dim), n_(n) {
        if (dim < 0 || n < 0) throw BadInput("SymVec: negative dimension or degree");
    }

    static SymVec monomial(int dim, const Exp& e, K coeff) {
        SymVec v(dim, 0);
        int n = 0;
        for (int x : e) {
            if (x < 0) throw BadInput("SymVec: negative exponent");
            n += x;
        }
        if (static_cast<int>(e.size()) != dim) throw DimensionMismatch("SymVec: exponent length mismatch");
        v.n_ = n;
        v.add_term(e, coeff);
        return v;
    }

    /// Degree-1 element from coordinates.
    static SymVec linear(const Vec<K>& coords) {
        SymVec v(static_cast<int>(coords.size()), 1);
        for (size_t k = 0; k < coords.size(); ++k) {
            if (hklat::is_zero(coords[k])) continue;
            Exp e(coords.size(), 0);
            e[k] = 1;
            v.add_term(e, coords[k]);
        }
        return v;
    }

    int dim() const { return dim_; }
    int degree() const { return n_; }
    const std::map<Exp, K>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exp& e, const K& c) {
        if (hklat::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (hklat::is_zero(it->second)) terms_.erase(it);
        }
    }

    K coeff(const Exp& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? K(0) : it->second;
    }

    SymVec operator-() const {
        SymVec r(dim_, n_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    SymVec& operator+=(const SymVec& o) {
        check_compatible(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    SymVec& operator-=(const SymVec& o) {
        check_compatible(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend SymVec operator+(SymVec a, const SymVec& b) { return a += b; }
    friend SymVec operator-(SymVec a, const SymVec& b) { return a -= b; }

    SymVec scaled(const K& c) const {
        SymVec r(dim_, n_);
        if (hklat::is_zero(c)) return r;
        for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
        return r;
    }

    /// Symmetric product: exponents add, coefficients multiply.
    friend SymVec operator*(const SymVec& a, const SymVec& b) {
        if (a.dim_ != b.dim_) throw DimensionMismatch("SymVec: product dimension mismatch");
        SymVec r(a.dim_, a.n_ + b.n_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exp e(ea);
                for (int k = 0; k < a.dim_; ++k) e[k] += eb[k];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    friend bool operator==(const SymVec& a, const SymVec& b) {
        return a.dim_ == b.dim_ && a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SymVec& a, const SymVec& b) { return !(a == b); }

private:
    void check_compatible(const SymVec& o) const {
        if (dim_ != o.dim_ || n_ != o.n_) throw DimensionMismatch("SymVec: degree or dimension mismatch");
    }

    int dim_;
    int n_;
    std::map<Exp, K> terms_;
};

inline SymVec<GaussRat> promote(const SymVec<Rat>& x) {
    SymVec<GaussRat> r(x.dim(), x.degree());
    for (const auto& [e, c] : x.terms()) r.add_term(e, GaussRat(c));
    return r;
}

/// Canonical enumeration of the monomial basis of Sym^n(K^dim), in ascending
/// lexicographic order of exponent vectors (matching map iteration order).
class MonomialBasis {
public:
    MonomialBasis(int dim, int n);

    int dim() const { return dim_; }
    int degree() const { return n_; }
    int size() const { return static_cast<int>(list_.size()); }
    const Exp& operator[](int i) const { return list_[i]; }
    int index(const Exp& e) const;

    template <class K>
    Vec<K> coords(const SymVec<K>& x) const {
        if (x.dim() != dim_ || x.degree() != n_) throw DimensionMismatch("MonomialBasis: mismatch");
        Vec<K> v(size(), K(0));
        for (const auto& [e, c] : x.terms()) v[index(e)] = c;
        return v;
    }

    template <class K>
    SymVec<K> from_coords(const Vec<K>& v) const {
        if (static_cast<int>(v.size()) != size()) throw DimensionMismatch("MonomialBasis: coord length");
        SymVec<K> x(dim_, n_);
        for (int i = 0; i < size(); ++i)
            if (!is_zero(v[i])) x.add_term(list_[i], v[i]);
        return x;
    }

private:
    int dim_, n_;
    std::vector<Exp> list_;
    std::map<Exp, int> index_;
};

long sym_dimension(int dim, int n);

/// Derivation (Leibniz) action of an endomorphism matrix on Sym^n: on a
/// monomial, the sum over factor positions of substituting the image of that
/// factor.
template <class K>
SymVec<K> derivation_action(const Mat<K>& g, const SymVec<K>& x) {
    if (g.rows() != x.dim() || g.cols() != x.dim())
        throw DimensionMismatch("derivation_action: operator dimension mismatch");
    SymVec<K> r(x.dim(), x.degree());
    for (const auto& [e, c] : x.terms()) {
        for (int k = 0; k < x.dim(); ++k) {
            if (e[k] == 0) continue;
            K mult = c * K(e[k]);
            for (int m = 0; m < x.dim(); ++m) {
                const K& gmk = g.at(m, k);
                if (is_zero(gmk)) continue;
                Exp e2(e);
                e2[k] -= 1;
                e2[m] += 1;
                r.add_term(e2, mult * gmk);
            }
        }
    }
    return r;
}

/// Contraction Sym^n -> Sym^{n-2}: on the pure tensor underlying a monomial,
/// sum q(v_i, v_j) over factor pairs i < j. In exponent coordinates a same-
/// variable pair contributes binom(a_k, 2) q(x_k, x_k) and a cross pair
/// a_k a_l q(x_k, x_l); this convention is pinned by the documented examples
/// and the polarization oracle in the tests.
template <class K>
SymVec<K> laplacian(const Mat<Rat>& gram, const SymVec<K>& x) {
    if (x.degree() < 2) throw DegreeTooSmall("laplacian: degree must be at least 2");
    if (gram.rows() != x.dim()) throw DimensionMismatch("laplacian: Gram dimension mismatch");
    SymVec<K> r(x.dim(), x.degree() - 2);
    for (const auto& [e, c] : x.terms()) {
        for (int k = 0; k < x.dim(); ++k) {
            if (e[k] >= 2 && !gram.at(k, k).is_zero()) {
                long pairs = static_cast<long>(e[k]) * (e[k] - 1) / 2;
                Exp e2(e);
                e2[k] -= 2;
                r.add_term(e2, c * K(gram.at(k, k)) * K(pairs));
            }
            for (int l = k + 1; l < x.dim(); ++l) {
                if (e[k] == 0 || e[l] == 0 || gram.at(k, l).is_zero()) continue;
                Exp e2(e);
                e2[k] -= 1;
                e2[l] -= 1;
                r.add_term(e2, c * K(gram.at(k, l)) * K(static_cast<long>(e[k]) * e[l]));
            }
        }
    }
    return r;
}

/// The inverse-form element in Sym^2: the unique so-invariant with
/// laplacian(dual) = dim. Coefficients come from the inverse Gram matrix.
SymVec<Rat> dual_form_element(const QuadSpace& space);

/// Inverse-form element of the H^2 block of a Mukai space, embedded in Sym^2
/// of the full space (used as the model of the dual BBF class).
SymVec<Rat> dual_form_element_h2(const MukaiSpace& space);

/// q-induced symmetric form: full permutation sum
/// <v_1...v_n, w_1...w_n> = sum_sigma prod_i q(v_i, w_sigma(i)), extended
/// bilinearly. No 1/n! normalization.
template <class K>
K sym_form(const Mat<Rat>& gram, const SymVec<K>& x, const SymVec<K>& y);

/// q-skew endomorphism of a quadratic space: M^T G + G M = 0, checked.
template <class K>
class LieOperator {
public:
    LieOperator(const QuadSpace& space, Mat<K> m) : m_(std::move(m)) {
        if (m_.rows() != space.dim() || m_.cols() != space.dim())
            throw DimensionMismatch("LieOperator: shape mismatch");
        Mat<K> g = promote_gram<K>(space.gram());
        if (!(m_.transposed() * g + g * m_).is_zero())
            throw BadInput("LieOperator: matrix is not q-skew");
    }

    const Mat<K>& matrix() const { return m_; }

    template <class T>
    static Mat<T> promote_gram(const Mat<Rat>& g) {
        if constexpr (std::is_same_v<T, Rat>) return g;
        else return promote(g);
    }

private:
    Mat<K> m_;
};

template <class K>
Mat<K> bracket(const Mat<K>& a, const Mat<K>& b) {
    return a * b - b * a;
}

/// e_{v,w}(x) = q(v,x) w - q(w,x) v; q-skew for any pair v, w.
template <class K>
Mat<K> pair_operator(const Mat<Rat>& gram, const Vec<K>& v, const Vec<K>& w) {
    int n = gram.rows();
    if (static_cast<int>(v.size()) != n || static_cast<int>(w.size()) != n)
        throw DimensionMismatch("pair_operator: vector length mismatch");
    Mat<K> m(n, n);
    for (int j = 0; j < n; ++j) {
        Vec<K> ej(n, K(0));
        ej[j] = K(1);
        K qv = form_eval(gram, v, ej);
        K qw = form_eval(gram, w, ej);
        for (int i = 0; i < n; ++i) m.at(i, j) += qv * w[i] - qw * v[i];
    }
    return m;
}

/// Standard basis e_{a,b}, a < b, of so(q): N(N-1)/2 independent skew
/// operators with respect to the space's form.
std::vector<Mat<Rat>> so_basis_matrices(const QuadSpace& space);

/// Index pairs (a, b), a < b, in the order used by so_basis_matrices.
std::vector<std::pair<int, int>> so_basis_pairs(int dim);

/// Cup-product operator e_omega on a Mukai space, for omega in the H^2 block
/// (full coordinates over any scalar field): e(alpha) = omega,
/// e(mu) = q(omega, mu) beta, e(beta) = 0. Nilpotent of order 3.
template <class K>
Mat<K> cup_matrix(const MukaiSpace& space, const Vec<K>& omega) {
    int n = space.dim();
    if (static_cast<int>(omega.size()) != n) throw DimensionMismatch("cup_matrix: length mismatch");
    if (!is_zero(omega[space.alpha_index()]) || !is_zero(omega[space.beta_index()]))
        throw NotDegreeZero("cup_matrix: omega has nonzero alpha or beta coordinate");
    Mat<K> m(n, n);
    int a = space.alpha_index(), b = space.beta_index();
    for (int i = 1; i < n - 1; ++i) m.at(i, a) = omega[i];
    const Mat<Rat>& g = space.total().gram();
    for (int j = 1; j < n - 1; ++j) {
        Vec<K> ej(n, K(0));
        ej[j] = K(1);
        m.at(b, j) = form_eval(g, omega, ej);
    }
    return m;
}

/// Dual Lefschetz operator for anisotropic omega: the degree -2 completion of
/// the sl2-triple (e_omega, h, Lambda_omega). Explicitly Lambda(alpha) = 0,
/// Lambda(mu) = (2 q(omega, mu)/q(omega)) alpha, Lambda(beta) = (2/q(omega)) omega.
Mat<Rat> dual_lefschetz_matrix(const MukaiSpace& space, const Vec<Rat>& omega);

/// Harmonic projection T onto ker(laplacian): writes x = h + dual * r with r in
/// Sym^{n-2} and returns h. The multiplication-then-contract map on Sym^{n-2}
/// is invertible for nondegenerate forms; failure signals SplitFailure.
template <class K>
SymVec<K> harmonic_project(const QuadSpace& space, const SymVec<K>& x);

/// Model of the Verbitsky component: basis of ker(laplacian) in Sym^n plus the
/// restricted symmetric bilinear form.
struct ShModel {
    int n = 0;
    std::vector<SymVec<Rat>> basis;
    Mat<Rat> gram_sym;

    int dimension() const { return static_cast<int>(basis.size()); }
};

ShModel sh_model(const QuadSpace& space, int n, bool with_gram = true);

/// Kernel dimension of the Laplacian on Sym^n (the Verbitsky dimension count).
long sh_dimension(const QuadSpace& space, int n);

/// Sym^n of a linear map: monomials map to products of column images.
template <class K>
SymVec<K> sym_power_image(const Mat<K>& m, const SymVec<K>& x) {
    if (m.rows() != x.dim() || m.cols() != x.dim())
        throw DimensionMismatch("sym_power_image: shape mismatch");
    SymVec<K> r(x.dim(), x.degree());
    for (const auto& [e, c] : x.terms()) {
        SymVec<K> prod(x.dim(), 0);
        prod.add_term(Exp(x.dim(), 0), K(1));
        for (int k = 0; k < x.dim(); ++k) {
            if (e[k] == 0) continue;
            Vec<K> col(x.dim());
            for (int i = 0; i < x.dim(); ++i) col[i] = m.at(i, k);
            SymVec<K> lin = SymVec<K>::linear(col);
            for (int t = 0; t < e[k]; ++t) prod = prod * lin;
        }
        r += prod.scaled(c);
    }
    return r;
}

// --- implementation of the templated declarations ---

namespace detail {
/// Permanent of the n x n pairing matrix between two factor lists, by
/// recursion over columns with zero pruning.
template <class K>
K factor_permanent(const Mat<Rat>& gram, const std::vector<int>& u, const std::vector<int>& w,
                   std::vector<bool>& used, size_t i) {
    if (i == u.size()) return K(1);
    K acc(0);
    for (size_t j = 0; j < w.size(); ++j) {
        if (used[j]) continue;
        const Rat& g = gram.at(u[i], w[j]);
        if (g.is_zero()) continue;
        used[j] = true;
        K sub = factor_permanent<K>(gram, u, w, used, i + 1);
        used[j] = false;
        if (!is_zero(sub)) acc += K(g) * sub;
    }
    return acc;
}

inline std::vector<int> expand_exponents(const Exp& e) {
    std::vector<int> f;
    for (size_t k = 0; k < e.size(); ++k)
        for (int t = 0; t < e[k]; ++t) f.push_back(static_cast<int>(k));
    return f;
}
}  // namespace detail

template <class K>
K sym_form(const Mat<Rat>& gram, const SymVec<K>& x, const SymVec<K>& y) {
    if (x.dim() != y.dim() || x.degree() != y.degree())
        throw DimensionMismatch("sym_form: degree or dimension mismatch");
    if (gram.rows() != x.dim()) throw DimensionMismatch("sym_form: Gram dimension mismatch");
    K acc(0);
    for (const auto& [ea, ca] : x.terms()) {
        std::vector<int> u = detail::expand_exponents(ea);
        for (const auto& [eb, cb] : y.terms()) {
            std::vector<int> w = detail::expand_exponents(eb);
            std::vector<bool> used(w.size(), false);
            K p = detail::factor_permanent<K>(gram, u, w, used, 0);
            if (!is_zero(p)) acc += ca * cb * p;
        }
    }
    return acc;
}

template <class K>
SymVec<K> harmonic_project(const QuadSpace& space, const SymVec<K>& x) {
    int n = x.degree();
    if (x.dim() != space.dim()) throw DimensionMismatch("harmonic_project: dimension mismatch");
    if (n < 2) return x;
    SymVec<K> dual = [&] {
        SymVec<Rat> d = dual_form_element(space);
        if constexpr (std::is_same_v<K, Rat>) return d;
        else return promote(d);
    }();
    MonomialBasis lower(space.dim(), n - 2);
    Mat<K> s(lower.size(), lower.size());
    for (int j = 0; j < lower.size(); ++j) {
        SymVec<K> rj = SymVec<K>::monomial(space.dim(), lower[j], K(1));
        Vec<K> col = lower.coords(laplacian(space.gram(), dual * rj));
        for (int i = 0; i < lower.size(); ++i) s.at(i, j) = col[i];
    }
    Vec<K> rhs = lower.coords(laplacian(space.gram(), x));
    std::optional<Vec<K>> r = solve(s, rhs);
    if (!r || rank_gauss(s) != lower.size())
        throw SplitFailure("harmonic_project: contraction system is singular");
    SymVec<K> h = x - dual * lower.from_coords(*r);
    return h;
}

}  // namespace hklat

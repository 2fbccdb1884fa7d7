#include "hklat/symrep.hpp"

#include <algorithm>

namespace hklat {

namespace {
void enumerate_exps(int dim, int pos, int remaining, Exp& cur, std::vector<Exp>& out) {
    if (pos == dim - 1) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
    }
    for (int k = 0; k <= remaining; ++k) {
        cur[pos] = k;
        enumerate_exps(dim, pos + 1, remaining - k, cur, out);
    }
}
}  // namespace

MonomialBasis::MonomialBasis(int dim, int n) : dim_(dim), n_(n) {
    if (dim <= 0) throw BadInput("MonomialBasis: dimension must be positive");
    if (n < 0) throw BadInput("MonomialBasis: negative degree");
    Exp cur(dim, 0);
    enumerate_exps(dim, 0, n, cur, list_);
    std::sort(list_.begin(), list_.end());
    for (int i = 0; i < static_cast<int>(list_.size()); ++i) index_[list_[i]] = i;
}

int MonomialBasis::index(const Exp& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) throw BadInput("MonomialBasis: exponent not in basis");
    return it->second;
}

long sym_dimension(int dim, int n) {
    // C(dim + n - 1, n)
    if (n < 0) return 0;
    return Rat::binomial(dim + n - 1, n).numerator().get_si();
}

SymVec<Rat> dual_form_element(const QuadSpace& space) {
    Mat<Rat> inv = inverse(space.gram());
    int n = space.dim();
    SymVec<Rat> d(n, 2);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            Rat c = inv.at(i, j);
            if (c.is_zero()) continue;
            Exp e(n, 0);
            e[i] += 1;
            e[j] += 1;
            d.add_term(e, i == j ? c : Rat(2) * c);
        }
    }
    return d;
}

SymVec<Rat> dual_form_element_h2(const MukaiSpace& space) {
    Mat<Rat> inv = inverse(space.base().gram());
    int n = space.dim();
    SymVec<Rat> d(n, 2);
    for (int i = 0; i < space.b2(); ++i) {
        for (int j = i; j < space.b2(); ++j) {
            Rat c = inv.at(i, j);
            if (c.is_zero()) continue;
            Exp e(n, 0);
            e[1 + i] += 1;
            e[1 + j] += 1;
            d.add_term(e, i == j ? c : Rat(2) * c);
        }
    }
    return d;
}

std::vector<std::pair<int, int>> so_basis_pairs(int dim) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<size_t>(dim) * (dim - 1) / 2);
    for (int a = 0; a < dim; ++a)
        for (int b = a + 1; b < dim; ++b) pairs.emplace_back(a, b);
    return pairs;
}

std::vector<Mat<Rat>> so_basis_matrices(const QuadSpace& space) {
    int n = space.dim();
    std::vector<Mat<Rat>> ops;
    ops.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    const Mat<Rat>& g = space.gram();
    for (auto [a, b] : so_basis_pairs(n)) {
        // e_{a,b}(x_j) = g(a,j) x_b - g(b,j) x_a
        Mat<Rat> m(n, n);
        for (int j = 0; j < n; ++j) {
            m.at(b, j) += g.at(a, j);
            m.at(a, j) -= g.at(b, j);
        }
        ops.push_back(std::move(m));
    }
    return ops;
}

Mat<Rat> dual_lefschetz_matrix(const MukaiSpace& space, const Vec<Rat>& omega) {
    if (!space.in_h2(omega)) throw NotDegreeZero("dual_lefschetz: omega not in the H^2 block");
    Rat q = space.total().form(omega);
    if (q.is_zero()) throw IsotropicClass("dual_lefschetz: q(omega) = 0, no sl2 completion");
    int n = space.dim();
    int a = space.alpha_index(), b = space.beta_index();
    Mat<Rat> m(n, n);
    Rat two_over_q = Rat(2) / q;
    const Mat<Rat>& g = space.total().gram();
    for (int j = 1; j < n - 1; ++j) {
        Vec<Rat> ej(n, Rat(0));
        ej[j] = Rat(1);
        m.at(a, j) = two_over_q * form_eval(g, omega, ej);
    }
    for (int i = 1; i < n - 1; ++i) m.at(i, b) = two_over_q * omega[i];
    return m;
}

ShModel sh_model(const QuadSpace& space, int n, bool with_gram) {
    if (n < 1) throw BadInput("sh_model: degree must be at least 1");
    ShModel model;
    model.n = n;
    MonomialBasis upper(space.dim(), n);
    if (n == 1) {
        for (int i = 0; i < upper.size(); ++i)
            model.basis.push_back(SymVec<Rat>::monomial(space.dim(), upper[i], Rat(1)));
    } else {
        MonomialBasis lower(space.dim(), n - 2);
        Mat<Rat> d(lower.size(), upper.size());
        for (int j = 0; j < upper.size(); ++j) {
            SymVec<Rat> img =
                laplacian(space.gram(), SymVec<Rat>::monomial(space.dim(), upper[j], Rat(1)));
            for (const auto& [e, c] : img.terms()) d.at(lower.index(e), j) = c;
        }
        for (const Vec<Rat>& v : kernel_basis(d)) model.basis.push_back(upper.from_coords(v));
    }
    if (with_gram) {
        int m = model.dimension();
        model.gram_sym = Mat<Rat>(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = i; j < m; ++j) {
                Rat v = sym_form(space.gram(), model.basis[i], model.basis[j]);
                model.gram_sym.at(i, j) = v;
                model.gram_sym.at(j, i) = v;
            }
    }
    return model;
}

long sh_dimension(const QuadSpace& space, int n) {
    if (n < 1) throw BadInput("sh_dimension: degree must be at least 1");
    if (n == 1) return space.dim();
    MonomialBasis upper(space.dim(), n);
    MonomialBasis lower(space.dim(), n - 2);
    Mat<Rat> d(lower.size(), upper.size());
    for (int j = 0; j < upper.size(); ++j) {
        SymVec<Rat> img =
            laplacian(space.gram(), SymVec<Rat>::monomial(space.dim(), upper[j], Rat(1)));
        for (const auto& [e, c] : img.terms()) d.at(lower.index(e), j) = c;
    }
    return upper.size() - rank(d);
}

}  // namespace hklat

#include "hklat/hodge.hpp"

namespace hklat {

HodgeData::HodgeData(const MukaiSpace& space, Vec<Rat> e, Vec<Rat> f)
    : e_(std::move(e)), f_(std::move(f)) {
    if (static_cast<int>(e_.size()) != space.b2() || static_cast<int>(f_.size()) != space.b2())
        throw InvalidPeriod("HodgeData: e, f must have b2 coordinates");
    const QuadSpace& base = space.base();
    Rat qe = base.form(e_), qf = base.form(f_);
    if (qe != qf) throw InvalidPeriod("HodgeData: q(e) != q(f)");
    if (qe.sign() <= 0) throw InvalidPeriod("HodgeData: q(e) must be positive");
    if (!base.form(e_, f_).is_zero()) throw InvalidPeriod("HodgeData: q(e, f) != 0");
    Mat<Rat> m(2, space.b2());
    for (int j = 0; j < space.b2(); ++j) {
        m.at(0, j) = e_[j];
        m.at(1, j) = f_[j];
    }
    if (rank(m) != 2) throw InvalidPeriod("HodgeData: e and f are linearly dependent");
}

Vec<GaussRat> HodgeData::sigma(const MukaiSpace& space) const {
    Vec<GaussRat> s(space.dim(), GaussRat(0));
    for (int j = 0; j < space.b2(); ++j) s[1 + j] = GaussRat(e_[j], f_[j]);
    return s;
}

Vec<GaussRat> HodgeData::sigma_bar(const MukaiSpace& space) const {
    Vec<GaussRat> s(space.dim(), GaussRat(0));
    for (int j = 0; j < space.b2(); ++j) s[1 + j] = GaussRat(e_[j], -f_[j]);
    return s;
}

Mat<GaussRat> hodge_grading(const MukaiSpace& space, const HodgeData& hd) {
    int n = space.dim();
    Vec<Rat> ee = hd.e_embedded(space);
    Vec<Rat> fe = hd.f_embedded(space);
    Rat q = space.total().form(ee);
    const Mat<Rat>& g = space.total().gram();
    Mat<GaussRat> m(n, n);
    GaussRat two_i = GaussRat(Rat(0), Rat(2));
    for (int j = 0; j < n; ++j) {
        Vec<Rat> ej(n, Rat(0));
        ej[j] = Rat(1);
        Rat ce = form_eval(g, ee, ej) / q;  // sigma-plane projection coefficients
        Rat cf = form_eval(g, fe, ej) / q;
        if (ce.is_zero() && cf.is_zero()) continue;
        // h'(x_j) = -2i ce f + 2i cf e
        for (int i = 0; i < n; ++i) {
            GaussRat v = two_i * GaussRat(cf * ee[i] - ce * fe[i]);
            if (!v.is_zero()) m.at(i, j) += v;
        }
    }
    return m;
}

std::vector<Vec<Rat>> sigma_perp_basis(const MukaiSpace& space, const HodgeData& hd) {
    int b2 = space.b2();
    Mat<Rat> m(2, b2);
    const Mat<Rat>& g = space.base().gram();
    for (int j = 0; j < b2; ++j) {
        Vec<Rat> ej(b2, Rat(0));
        ej[j] = Rat(1);
        m.at(0, j) = form_eval(g, hd.e(), ej);
        m.at(1, j) = form_eval(g, hd.f(), ej);
    }
    std::vector<Vec<Rat>> basis;
    for (const Vec<Rat>& v : kernel_basis(m)) basis.push_back(space.embed(v));
    return basis;
}

std::vector<Mat<GaussRat>> ht2_space(const MukaiSpace& space, const HodgeData& hd) {
    Vec<GaussRat> sbar = hd.sigma_bar(space);
    std::vector<Vec<GaussRat>> degree_zero;
    degree_zero.push_back(promote(space.alpha()));
    for (const Vec<Rat>& w : sigma_perp_basis(space, hd)) degree_zero.push_back(promote(w));
    degree_zero.push_back(promote(space.beta()));
    if (static_cast<int>(degree_zero.size()) != space.b2())
        throw InvalidPeriod("ht2_space: unexpected degree-zero block dimension");

    const Mat<Rat>& g = space.total().gram();
    Mat<GaussRat> hprime = hodge_grading(space, hd);
    std::vector<Mat<GaussRat>> ops;
    ops.reserve(degree_zero.size());
    for (const Vec<GaussRat>& u : degree_zero) {
        Mat<GaussRat> op = pair_operator(g, sbar, u);
        if (bracket(hprime, op) != op.scaled(GaussRat(2)))
            throw Error("ht2_space: eigenvalue relation [h', g] = 2g failed");
        ops.push_back(std::move(op));
    }
    // Independence: the operators must span a b2-dimensional subspace.
    int n = space.dim();
    Mat<GaussRat> flat(static_cast<int>(ops.size()), n * n);
    for (size_t k = 0; k < ops.size(); ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) flat.at(static_cast<int>(k), i * n + j) = ops[k].at(i, j);
    if (rank(flat) != static_cast<int>(ops.size()))
        throw Error("ht2_space: constructed operators are not independent");
    return ops;
}

std::vector<Mat<Rat>> so_h2_subalgebra(const MukaiSpace& space) {
    const Mat<Rat>& g = space.total().gram();
    int n = space.dim();
    std::vector<Mat<Rat>> ops;
    for (int a = 1; a < n - 1; ++a) {
        for (int b = a + 1; b < n - 1; ++b) {
            Vec<Rat> va(n, Rat(0)), vb(n, Rat(0));
            va[a] = Rat(1);
            vb[b] = Rat(1);
            ops.push_back(pair_operator(g, va, vb));
        }
    }
    return ops;
}

namespace {
/// Rows of the linear condition L(M) = 0 on the N^2 matrix entries.
template <class K, class F>
void append_condition(Mat<K>& out, int& row, int n, F&& apply) {
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Mat<K> e(n, n);
            e.at(i, j) = K(1);
            Mat<K> img = apply(e);
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) out.at(row + p * n + q, i * n + j) = img.at(p, q);
        }
    }
    row += n * n;
}

template <class K>
std::vector<Mat<K>> kernel_matrices(const Mat<K>& constraints, int n) {
    std::vector<Mat<K>> out;
    for (const Vec<K>& v : kernel_basis(constraints)) {
        Mat<K> m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = v[i * n + j];
        out.push_back(std::move(m));
    }
    return out;
}
}  // namespace

BracketDegreeReport bracket_degree_check(const MukaiSpace& space, const HodgeData& hd) {
    int n = space.dim();
    Mat<GaussRat> g = promote(space.total().gram());
    Mat<GaussRat> h = promote(grading_matrix(space));
    Mat<GaussRat> hp = hodge_grading(space, hd);

    auto eigenspace = [&](int h_eigen, int hp_eigen) {
        Mat<GaussRat> constraints(3 * n * n, n * n);
        int row = 0;
        append_condition(constraints, row, n,
                         [&](const Mat<GaussRat>& m) { return m.transposed() * g + g * m; });
        append_condition(constraints, row, n, [&](const Mat<GaussRat>& m) {
            return bracket(h, m) - m.scaled(GaussRat(h_eigen));
        });
        append_condition(constraints, row, n, [&](const Mat<GaussRat>& m) {
            return bracket(hp, m) - m.scaled(GaussRat(hp_eigen));
        });
        return kernel_matrices(constraints, n);
    };

    std::vector<Mat<GaussRat>> space_a = eigenspace(0, 2);
    std::vector<Mat<GaussRat>> space_b = eigenspace(2, 0);

    BracketDegreeReport report;
    report.dim_geometric = static_cast<int>(space_a.size());
    report.dim_kaehler = static_cast<int>(space_b.size());

    Mat<GaussRat> e_sigma = cup_matrix(space, hd.sigma(space));

    // Coordinates of [e_sigma, a] in the span of space_b.
    Mat<GaussRat> bmat(n * n, static_cast<int>(space_b.size()));
    for (size_t k = 0; k < space_b.size(); ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) bmat.at(i * n + j, static_cast<int>(k)) = space_b[k].at(i, j);
    Mat<GaussRat> coords(static_cast<int>(space_b.size()), static_cast<int>(space_a.size()));
    bool all_in_span = true;
    bool second_zero = true;
    for (size_t k = 0; k < space_a.size(); ++k) {
        Mat<GaussRat> img = bracket(e_sigma, space_a[k]);
        Vec<GaussRat> rhs(n * n, GaussRat(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) rhs[i * n + j] = img.at(i, j);
        std::optional<Vec<GaussRat>> c = solve(bmat, rhs);
        if (!c) {
            all_in_span = false;
            continue;
        }
        for (size_t t = 0; t < c->size(); ++t) coords.at(static_cast<int>(t), static_cast<int>(k)) = (*c)[t];
        if (!bracket(e_sigma, img).is_zero()) second_zero = false;
    }
    report.bijective = all_in_span && report.dim_geometric == report.dim_kaehler &&
                       rank(coords) == report.dim_geometric;
    report.second_step_vanishes = second_zero;
    return report;
}

}  // namespace hklat

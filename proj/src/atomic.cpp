#include "hklat/atomic.hpp"

namespace hklat {

namespace {
void require_harmonic(const MukaiSpace& space, const SymVec<Rat>& x, const char* who) {
    if (x.degree() >= 2 && !laplacian(space.total().gram(), x).is_zero())
        throw BadInput(std::string(who) + ": input is not harmonic (laplacian is nonzero)");
}
}  // namespace

Vec<Rat> canonical_line(const Vec<Rat>& v) {
    mpz_class den_lcm(1);
    for (const Rat& x : v) {
        mpz_class d = x.denominator();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<mpz_class> nums;
    nums.reserve(v.size());
    mpz_class content(0);
    for (const Rat& x : v) {
        mpz_class n = x.numerator() * (den_lcm / x.denominator());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
        nums.push_back(std::move(n));
    }
    if (content == 0) return Vec<Rat>(v.size(), Rat(0));
    int lead_sign = 0;
    for (const mpz_class& n : nums) {
        if (n != 0) { lead_sign = sgn(n); break; }
    }
    Vec<Rat> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        mpz_class n = nums[i] / content;
        if (lead_sign < 0) n = -n;
        out[i] = Rat(mpq_class(n));
    }
    return out;
}

AnnihilatorReport annihilator(const MukaiSpace& space, const SymVec<Rat>& x) {
    if (x.dim() != space.dim()) throw DimensionMismatch("annihilator: dimension mismatch");
    std::vector<Mat<Rat>> gens = so_basis_matrices(space.total());
    MonomialBasis basis(space.dim(), x.degree());
    Mat<Rat> a(basis.size(), static_cast<int>(gens.size()));
    for (size_t j = 0; j < gens.size(); ++j) {
        Vec<Rat> col = basis.coords(derivation_action(gens[j], x));
        for (int i = 0; i < basis.size(); ++i) a.at(i, static_cast<int>(j)) = col[i];
    }
    AnnihilatorReport report;
    for (const Vec<Rat>& c : kernel_basis(a)) {
        Mat<Rat> op(space.dim(), space.dim());
        for (size_t j = 0; j < gens.size(); ++j)
            if (!c[j].is_zero()) op += gens[j].scaled(c[j]);
        report.basis.push_back(std::move(op));
    }
    report.dim_ann = static_cast<int>(report.basis.size());
    report.codim = static_cast<int>(gens.size()) - report.dim_ann;
    return report;
}

namespace {
/// Common kernel of a family of operators acting on the ambient space.
std::vector<Vec<Rat>> invariant_subspace(int dim, const std::vector<Mat<Rat>>& ops) {
    if (ops.empty()) {
        std::vector<Vec<Rat>> full;
        for (int i = 0; i < dim; ++i) {
            Vec<Rat> e(dim, Rat(0));
            e[i] = Rat(1);
            full.push_back(std::move(e));
        }
        return full;
    }
    Mat<Rat> stacked(static_cast<int>(ops.size()) * dim, dim);
    for (size_t k = 0; k < ops.size(); ++k)
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                stacked.at(static_cast<int>(k) * dim + i, j) = ops[k].at(i, j);
    return kernel_basis(stacked);
}
}  // namespace

AtomicVerdict is_atomic_codim(const MukaiSpace& space, const SymVec<Rat>& x) {
    AtomicVerdict verdict;
    verdict.criterion = "codim";
    if (x.is_zero()) {
        verdict.atomic = false;
        verdict.codim = 0;
        verdict.notes.push_back("zero vector: annihilated by the full algebra, not atomic");
        return verdict;
    }
    require_harmonic(space, x, "is_atomic_codim");
    AnnihilatorReport report = annihilator(space, x);
    verdict.codim = report.codim;
    verdict.atomic = (report.codim == space.b2() + 1);
    if (verdict.atomic) {
        std::vector<Vec<Rat>> inv = invariant_subspace(space.dim(), report.basis);
        if (inv.size() != 1)
            throw WitnessAmbiguous("is_atomic_codim: invariant subspace has dimension " +
                                   std::to_string(inv.size()));
        Vec<Rat> v = canonical_line(inv[0]);
        for (const Mat<Rat>& op : report.basis)
            if (!vec_is_zero(op.apply(v))) throw Error("is_atomic_codim: witness not annihilated");
        verdict.vtilde = std::move(v);
    }
    return verdict;
}

AtomicVerdict is_atomic_obstruction(const MukaiSpace& space, const SymVec<Rat>& x,
                                    const HodgeData& hd) {
    AtomicVerdict verdict;
    verdict.criterion = "obstruction";
    if (x.is_zero()) {
        verdict.atomic = false;
        verdict.obs_rank = 0;
        verdict.notes.push_back("zero vector: not atomic");
        return verdict;
    }
    require_harmonic(space, x, "is_atomic_obstruction");
    SymVec<GaussRat> xc = promote(x);
    Mat<GaussRat> hp = hodge_grading(space, hd);
    if (!derivation_action(hp, xc).is_zero())
        throw NotHodgeType("is_atomic_obstruction: h' does not annihilate x");

    std::vector<Mat<GaussRat>> ht2 = ht2_space(space, hd);
    MonomialBasis basis(space.dim(), x.degree());
    Mat<GaussRat> obs(basis.size(), static_cast<int>(ht2.size()));
    for (size_t j = 0; j < ht2.size(); ++j) {
        Vec<GaussRat> col = basis.coords(derivation_action(ht2[j], xc));
        for (int i = 0; i < basis.size(); ++i) obs.at(i, static_cast<int>(j)) = col[i];
    }
    int r = rank(obs);
    verdict.obs_rank = r;
    verdict.atomic = (r == 1);
    if (r == 0)
        verdict.notes.push_back("annihilated by the full degree-two part: never atomic");
    if (!verdict.atomic) return verdict;

    // Witness recovery through the kernel pairing: vtilde is the unique line in
    // the Hodge-degree-zero block pairing trivially with the kernel of the
    // contraction map.
    std::vector<Vec<GaussRat>> w_ops_coords = kernel_basis(obs);
    std::vector<Vec<GaussRat>> degree_zero;
    degree_zero.push_back(promote(space.alpha()));
    for (const Vec<Rat>& w : sigma_perp_basis(space, hd)) degree_zero.push_back(promote(w));
    degree_zero.push_back(promote(space.beta()));

    Vec<GaussRat> sigma = hd.sigma(space);
    const Mat<Rat>& g = space.total().gram();
    Mat<GaussRat> pairing(static_cast<int>(w_ops_coords.size()),
                          static_cast<int>(degree_zero.size()));
    for (size_t k = 0; k < w_ops_coords.size(); ++k) {
        Mat<GaussRat> op(space.dim(), space.dim());
        for (size_t j = 0; j < ht2.size(); ++j)
            if (!w_ops_coords[k][j].is_zero()) op += ht2[j].scaled(w_ops_coords[k][j]);
        for (size_t j = 0; j < degree_zero.size(); ++j) {
            Vec<GaussRat> img = op.apply(degree_zero[j]);
            pairing.at(static_cast<int>(k), static_cast<int>(j)) = form_eval(g, sigma, img);
        }
    }
    std::vector<Vec<GaussRat>> line = kernel_basis(pairing);
    if (line.size() != 1)
        throw WitnessAmbiguous("is_atomic_obstruction: pairing kernel has dimension " +
                               std::to_string(line.size()));
    Vec<GaussRat> vt(space.dim(), GaussRat(0));
    for (size_t j = 0; j < degree_zero.size(); ++j)
        if (!line[0][j].is_zero())
            vt = vec_add(vt, vec_scale(degree_zero[j], line[0][j]));
    // The line must be rational: normalize by the first nonzero coordinate and
    // require all imaginary parts to vanish.
    GaussRat lead(0);
    for (const GaussRat& c : vt) {
        if (!c.is_zero()) { lead = c; break; }
    }
    if (lead.is_zero()) throw Error("is_atomic_obstruction: zero witness");
    Vec<Rat> rational(space.dim());
    for (size_t i = 0; i < vt.size(); ++i) {
        GaussRat c = vt[i] / lead;
        if (!c.is_real())
            throw Error("is_atomic_obstruction: witness line is not rational");
        rational[i] = c.re();
    }
    verdict.vtilde = canonical_line(rational);
    return verdict;
}

std::optional<ExtendedVector> solve_extended_vector(const MukaiSpace& space, const SymVec<Rat>& x,
                                                    const Rat& r, const Vec<Rat>& c1) {
    if (r.is_zero()) throw ZeroRank("solve_extended_vector: rank 0 has no canonical scaling");
    if (!space.in_h2(c1)) throw NotDegreeZero("solve_extended_vector: c1 not in the H^2 block");
    if (x.is_zero()) return std::nullopt;
    require_harmonic(space, x, "solve_extended_vector");
    int n = x.degree();
    // x = sum_k binom(n,k) (a s^k) T((r alpha + c1)^{n-k} beta^k)
    Vec<Rat> head = vec_add(vec_scale(space.alpha(), r), c1);
    SymVec<Rat> head_lin = SymVec<Rat>::linear(head);
    SymVec<Rat> beta_lin = SymVec<Rat>::linear(space.beta());
    MonomialBasis basis(space.dim(), n);
    Mat<Rat> u(basis.size(), n + 1);
    SymVec<Rat> pow(space.dim(), 0);
    pow.add_term(Exp(space.dim(), 0), Rat(1));
    std::vector<SymVec<Rat>> head_pows;
    for (int k = 0; k <= n; ++k) {
        head_pows.push_back(pow);
        if (k < n) pow = pow * head_lin;
    }
    for (int k = 0; k <= n; ++k) {
        SymVec<Rat> term = head_pows[n - k];
        for (int t = 0; t < k; ++t) term = term * beta_lin;
        Vec<Rat> col = basis.coords(harmonic_project(space.total(), term).scaled(Rat::binomial(n, k)));
        for (int i = 0; i < basis.size(); ++i) u.at(i, k) = col[i];
    }
    std::optional<Vec<Rat>> y = solve(u, basis.coords(x));
    if (!y) return std::nullopt;
    if (rank(u) != n + 1)
        throw Error("solve_extended_vector: expansion columns are dependent");
    Rat a = (*y)[0];
    if (a.is_zero()) return std::nullopt;
    Rat s = (*y)[1] / a;
    Rat sk(1);
    for (int k = 0; k <= n; ++k) {
        if ((*y)[k] != a * sk) return std::nullopt;
        sk *= s;
    }
    ExtendedVector ext;
    ext.r = r;
    ext.c1 = c1;
    ext.s = s;
    ext.a = a;
    return ext;
}

SymVec<Rat> transport(const MukaiSpace& space, const Isometry& g, const SymVec<Rat>& x) {
    if (x.dim() != space.dim()) throw DimensionMismatch("transport: dimension mismatch");
    return sym_power_image(g.matrix(), x);
}

SymVec<Rat> kappa_twist(const MukaiSpace& space, const SymVec<Rat>& x, const Rat& r,
                        const Vec<Rat>& c1) {
    if (r.is_zero()) throw ZeroRank("kappa_twist: rank must be nonzero");
    if (!space.in_h2(c1)) throw NotDegreeZero("kappa_twist: c1 not in the H^2 block");
    Vec<Rat> omega = vec_scale(c1, Rat(-1) / r);
    return transport(space, exp_cup(space, omega), x);
}

bool is_deformation_invariant(const MukaiSpace& space, const SymVec<Rat>& x) {
    for (const Mat<Rat>& g : so_h2_subalgebra(space))
        if (!derivation_action(g, x).is_zero()) return false;
    return true;
}

namespace {
int monomial_h_degree(const MukaiSpace& space, const Exp& e) {
    return 2 * (e[space.beta_index()] - e[space.alpha_index()]);
}
}  // namespace

ModularityVerdict modularity_check(const MukaiSpace& space, const SymVec<Rat>& x, const Rat& r,
                                   const Vec<Rat>& c1) {
    int n = x.degree();
    if (n < 2) throw BadInput("modularity_check: degree must be at least 2");
    std::optional<ExtendedVector> ext = solve_extended_vector(space, x, r, c1);
    if (!ext) throw NotAtomicError("modularity_check: x is not of extended-vector form for (r, c1)");

    SymVec<Rat> twisted = kappa_twist(space, x, r, c1);
    SymVec<Rat> component(space.dim(), n);
    for (const auto& [e, c] : twisted.terms())
        if (monomial_h_degree(space, e) == 4 - 2 * n) component.add_term(e, c);

    // Model of the dual BBF class in the degree-(4-2n) graded piece:
    // T(alpha^{n-2} * dual form of the H^2 block).
    Exp alpha_pow(space.dim(), 0);
    alpha_pow[space.alpha_index()] = n - 2;
    SymVec<Rat> q2 = harmonic_project(
        space.total(),
        SymVec<Rat>::monomial(space.dim(), alpha_pow, Rat(1)) * dual_form_element_h2(space));
    if (q2.is_zero()) throw Error("modularity_check: dual-form model vanished");

    ModularityVerdict verdict;
    if (component.is_zero()) {
        verdict.modular = true;
        verdict.scalar = Rat(0);
        verdict.notes.push_back("graded component vanishes");
        return verdict;
    }
    const auto& [e0, c0] = *q2.terms().begin();
    Rat scale = component.coeff(e0) / c0;
    verdict.modular = (component == q2.scaled(scale));
    verdict.scalar = scale;
    if (!verdict.modular) verdict.notes.push_back("component is not proportional to the dual-form class");
    return verdict;
}

IsotropyVerdict isotropy_check(const MukaiSpace& space, const SymVec<Rat>& x,
                               const Vec<Rat>& vtilde, const HodgeData& hd) {
    if (static_cast<int>(vtilde.size()) != space.dim())
        throw DimensionMismatch("isotropy_check: witness length mismatch");
    IsotropyVerdict verdict;
    verdict.applicable = vtilde[space.alpha_index()].is_zero();
    SymVec<GaussRat> xc = promote(x);
    Mat<GaussRat> e_sigma = cup_matrix(space, hd.sigma(space));
    Mat<GaussRat> e_sigma_bar = cup_matrix(space, hd.sigma_bar(space));
    verdict.annihilated = derivation_action(e_sigma, xc).is_zero() &&
                          derivation_action(e_sigma_bar, xc).is_zero();
    if (verdict.applicable) {
        verdict.holds = verdict.annihilated;
    } else {
        verdict.holds = true;
        verdict.notes.push_back("not applicable: witness has nonzero alpha coordinate");
        if (!verdict.annihilated)
            verdict.notes.push_back("contrast case: sigma-plane operators act nontrivially");
    }
    return verdict;
}

Rat mukai_pairing(const MukaiSpace& space, const SymVec<Rat>& x, const SymVec<Rat>& y,
                  const Rat& epsilon) {
    return epsilon * sym_form(space.total().gram(), x, y);
}

SphericalVerdict spherical_verdict(const SphericalPreset& preset) {
    SphericalVerdict v;
    v.preset = preset.name;
    if (preset.n <= 1) {
        v.excluded = false;
        v.verdict = "not excluded by this criterion";
        v.explanation.push_back("dimension two: the exclusion hypothesis does not apply");
        return v;
    }
    if (!preset.generated_below_middle) {
        v.excluded = false;
        v.verdict = "not excluded by this criterion";
        v.explanation.push_back(
            "cohomology not known to be generated below degree 2n-1; the Euler-pairing argument "
            "does not start");
        return v;
    }
    v.excluded = true;
    v.verdict = "no spherical objects";
    v.explanation.push_back(
        "a spherical object has Ext^i(E,E) = 0 for 0 < i < 2n, so its Mukai vector pairs to zero "
        "against the subalgebra generated below degree 2n-1");
    v.explanation.push_back(
        "generation below degree 2n-1 makes that subalgebra everything, forcing v(E) = 0");
    v.explanation.push_back("v(E) = 0 contradicts <v(E), v(E)> = chi(E, E) = 2");
    if (!preset.citation.empty()) v.explanation.push_back("generation input: " + preset.citation);
    return v;
}

}  // namespace hklat

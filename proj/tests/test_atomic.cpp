#include <doctest.h>

#include "hklat/atomic.hpp"

using namespace hklat;

namespace {
QuadSpace diag_space(std::vector<long> entries) {
    int n = static_cast<int>(entries.size());
    Mat<Rat> g(n, n);
    for (int i = 0; i < n; ++i) g.at(i, i) = Rat(entries[i]);
    return QuadSpace(std::move(g));
}

MukaiSpace small_mukai() { return MukaiSpace{diag_space({2, -2})}; }

SymVec<Rat> power(const MukaiSpace& s, const Vec<Rat>& v, int n) {
    SymVec<Rat> p(s.dim(), 0);
    p.add_term(Exp(s.dim(), 0), Rat(1));
    SymVec<Rat> lin = SymVec<Rat>::linear(v);
    for (int t = 0; t < n; ++t) p = p * lin;
    return p;
}

SymVec<Rat> projected_power(const MukaiSpace& s, const Vec<Rat>& v, int n) {
    return harmonic_project(s.total(), power(s, v, n));
}

HodgeData standard_period(const MukaiSpace& space) {
    Vec<Rat> e(space.b2(), Rat(0)), f(space.b2(), Rat(0));
    e[0] = Rat(1);
    f[1] = Rat(1);
    return HodgeData(space, e, f);
}
}  // namespace

TEST_CASE("annihilator dimensions on the pinned cases") {
    MukaiSpace space = small_mukai();
    int n = 2;
    // alpha^n: stabilizer of an isotropic line has dimension (N-1)(N-2)/2 = 3
    SymVec<Rat> an = power(space, space.alpha(), n);
    AnnihilatorReport r = annihilator(space, an);
    CHECK(r.dim_ann == 3);
    CHECK(r.codim == 3);  // = b2 + 1
    for (const auto& op : r.basis) CHECK(derivation_action(op, an).is_zero());
    // zero vector: everything annihilates
    AnnihilatorReport z = annihilator(space, SymVec<Rat>(space.dim(), n));
    CHECK(z.dim_ann == 6);
    CHECK(z.codim == 0);
    // alpha^2 + beta^2 has a smaller annihilator
    SymVec<Rat> mix = power(space, space.alpha(), 2) + power(space, space.beta(), 2);
    CHECK(annihilator(space, mix).codim > 3);
}

TEST_CASE("codimension criterion with witness recovery") {
    MukaiSpace space = small_mukai();
    // T((alpha+beta)^2): atomic with anisotropic witness, q(v) = -2
    Vec<Rat> v = vec_add(space.alpha(), space.beta());
    SymVec<Rat> x = projected_power(space, v, 2);
    AtomicVerdict verdict = is_atomic_codim(space, x);
    CHECK(verdict.atomic);
    CHECK(verdict.codim == space.b2() + 1);
    REQUIRE(verdict.vtilde);
    CHECK(*verdict.vtilde == canonical_line(v));
    CHECK(space.total().form(v) == Rat(-2));
    // alpha^n: the isotropic branch
    SymVec<Rat> an = power(space, space.alpha(), 2);
    AtomicVerdict iso = is_atomic_codim(space, an);
    CHECK(iso.atomic);
    REQUIRE(iso.vtilde);
    CHECK(*iso.vtilde == space.alpha());
    // and a non-example
    SymVec<Rat> mix = power(space, space.alpha(), 2) + power(space, space.beta(), 2);
    AtomicVerdict no = is_atomic_codim(space, mix);
    CHECK_FALSE(no.atomic);
    CHECK_FALSE(no.vtilde.has_value());
    // zero vector is not atomic by definition
    CHECK_FALSE(is_atomic_codim(space, SymVec<Rat>(space.dim(), 2)).atomic);
    // non-harmonic input violates the precondition
    CHECK_THROWS_AS(is_atomic_codim(space, power(space, v, 2)), BadInput);
}

TEST_CASE("obstruction criterion agrees and recovers a rational witness") {
    MukaiSpace space{diag_space({2, 2, -2})};
    HodgeData hd = standard_period(space);
    int n = 2;
    SymVec<Rat> an = power(space, space.alpha(), n);
    AtomicVerdict verdict = is_atomic_obstruction(space, an, hd);
    CHECK(verdict.atomic);
    CHECK(verdict.obs_rank == 1);
    REQUIRE(verdict.vtilde);
    CHECK(*verdict.vtilde == space.alpha());
    CHECK(is_atomic_codim(space, an).atomic == verdict.atomic);

    // two generic powers in general position: rank at least 2, not atomic
    Vec<Rat> v1 = vec_add(space.alpha(), space.beta());                      // Hodge type
    Vec<Rat> v2 = vec_add(space.alpha(), vec_scale(space.beta(), Rat(-3)));  // Hodge type
    SymVec<Rat> x = projected_power(space, v1, n) + projected_power(space, v2, n);
    AtomicVerdict no = is_atomic_obstruction(space, x, hd);
    CHECK_FALSE(no.atomic);
    CHECK(no.obs_rank >= 2);
    CHECK(is_atomic_codim(space, x).atomic == no.atomic);

    // non-Hodge-type input is rejected: e1 pairs with the period plane
    Vec<Rat> bad = vec_add(space.alpha(), space.embed(Vec<Rat>{Rat(1), Rat(0), Rat(0)}));
    SymVec<Rat> y = projected_power(space, bad, n);
    CHECK_THROWS_AS(is_atomic_obstruction(space, y, hd), NotHodgeType);

    // a Hodge-type vector with orthogonal-complement H^2 content
    Vec<Rat> good = vec_add(space.alpha(), space.embed(Vec<Rat>{Rat(0), Rat(0), Rat(1)}));
    SymVec<Rat> z = projected_power(space, good, n);
    AtomicVerdict ok = is_atomic_obstruction(space, z, hd);
    CHECK(ok.atomic);
    CHECK(*ok.vtilde == canonical_line(good));
}

TEST_CASE("extended-vector solve on the pinned cases") {
    MukaiSpace space = small_mukai();
    Vec<Rat> e1 = space.embed(Vec<Rat>{Rat(1), Rat(0)});
    // x = 5 T((2 alpha + e1 + 3 beta)^2)
    Vec<Rat> v = vec_add(vec_add(vec_scale(space.alpha(), Rat(2)), e1), vec_scale(space.beta(), Rat(3)));
    SymVec<Rat> x = projected_power(space, v, 2).scaled(Rat(5));
    auto ext = solve_extended_vector(space, x, Rat(2), e1);
    REQUIRE(ext);
    CHECK(ext->a == Rat(5));
    CHECK(ext->s == Rat(3));
    // T(alpha^n) with r = 1, c1 = 0
    Vec<Rat> zero(space.dim(), Rat(0));
    auto trivial = solve_extended_vector(space, power(space, space.alpha(), 2), Rat(1), zero);
    REQUIRE(trivial);
    CHECK(trivial->a == Rat(1));
    CHECK(trivial->s == Rat(0));
    // non-atomic input is infeasible
    SymVec<Rat> mix = power(space, space.alpha(), 2) + power(space, space.beta(), 2);
    CHECK_FALSE(solve_extended_vector(space, mix, Rat(1), zero).has_value());
    CHECK_THROWS_AS(solve_extended_vector(space, x, Rat(0), e1), ZeroRank);
}

TEST_CASE("transport: equivariance and verdict invariance") {
    MukaiSpace space = small_mukai();
    Vec<Rat> e1 = space.embed(Vec<Rat>{Rat(1), Rat(0)});
    Vec<Rat> v = vec_add(space.alpha(), vec_scale(space.beta(), Rat(2)));
    SymVec<Rat> x = projected_power(space, v, 2);
    Isometry id(space, Mat<Rat>::identity(space.dim()));
    CHECK(transport(space, id, x) == x);
    Isometry g = exp_cup(space, e1);
    CHECK(transport(space, g, x) == projected_power(space, g.apply(v), 2));
    AtomicVerdict before = is_atomic_codim(space, x);
    AtomicVerdict after = is_atomic_codim(space, transport(space, g, x));
    CHECK(before.atomic == after.atomic);
    CHECK(before.codim == after.codim);
    CHECK(*after.vtilde == canonical_line(g.apply(v)));
}

TEST_CASE("kappa twist strips the middle component") {
    MukaiSpace space = small_mukai();
    Vec<Rat> e1 = space.embed(Vec<Rat>{Rat(1), Rat(0)});
    Vec<Rat> zero(space.dim(), Rat(0));
    Vec<Rat> v = vec_add(vec_add(vec_scale(space.alpha(), Rat(2)), e1), vec_scale(space.beta(), Rat(3)));
    SymVec<Rat> x = projected_power(space, v, 2);
    CHECK(kappa_twist(space, x, Rat(2), zero) == x);  // c1 = 0 twists by nothing
    SymVec<Rat> twisted = kappa_twist(space, x, Rat(2), e1);
    // the twisted class is T((2 alpha + t beta)^2): recover and check support
    AtomicVerdict verdict = is_atomic_codim(space, twisted);
    REQUIRE(verdict.atomic);
    const Vec<Rat>& w = *verdict.vtilde;
    for (int j = 1; j < space.dim() - 1; ++j) CHECK(w[j].is_zero());
    // two half twists equal one full twist
    Vec<Rat> half = vec_scale(e1, Rat(1, 2));
    SymVec<Rat> staged = kappa_twist(space, kappa_twist(space, x, Rat(2), half), Rat(2), half);
    CHECK(staged == twisted);
    CHECK_THROWS_AS(kappa_twist(space, x, Rat(0), e1), ZeroRank);
}

TEST_CASE("deformation invariance distinguishes extension classes") {
    MukaiSpace space = small_mukai();
    Vec<Rat> v = vec_add(vec_scale(space.alpha(), Rat(2)), vec_scale(space.beta(), Rat(5)));
    CHECK(is_deformation_invariant(space, projected_power(space, v, 2)));
    Vec<Rat> with_h2 = vec_add(v, space.embed(Vec<Rat>{Rat(1), Rat(0)}));
    CHECK_FALSE(is_deformation_invariant(space, projected_power(space, with_h2, 2)));
    // classes built from the dual form of the middle block are invariant
    SymVec<Rat> q2 = harmonic_project(space.total(), dual_form_element_h2(space));
    CHECK(is_deformation_invariant(space, q2));
}

TEST_CASE("modularity of extended-vector classes") {
    MukaiSpace space = small_mukai();
    Vec<Rat> e1 = space.embed(Vec<Rat>{Rat(1), Rat(0)});
    Vec<Rat> zero(space.dim(), Rat(0));
    // T((alpha + t beta)^n) passes with scalar n t / 2
    for (int n = 2; n <= 3; ++n) {
        Rat t(7, 2);
        Vec<Rat> v = vec_add(space.alpha(), vec_scale(space.beta(), t));
        SymVec<Rat> x = projected_power(space, v, n);
        ModularityVerdict verdict = modularity_check(space, x, Rat(1), zero);
        CHECK(verdict.modular);
        CHECK(verdict.scalar == Rat(n) * t / Rat(2));
    }
    // the full pipeline example
    Vec<Rat> v = vec_add(vec_add(vec_scale(space.alpha(), Rat(2)), e1), vec_scale(space.beta(), Rat(3)));
    SymVec<Rat> x = projected_power(space, v, 2);
    CHECK(modularity_check(space, x, Rat(2), e1).modular);
    // guard: non-atomic inputs are rejected
    SymVec<Rat> mix = power(space, space.alpha(), 2) + power(space, space.beta(), 2);
    CHECK_THROWS_AS(modularity_check(space, mix, Rat(1), zero), NotAtomicError);
}

TEST_CASE("model-level Chern-class isotropy") {
    MukaiSpace space{diag_space({2, 2, -2})};
    HodgeData hd = standard_period(space);
    int n = 2;
    // witness without alpha component, orthogonal to the period plane
    Vec<Rat> lambda = space.embed(Vec<Rat>{Rat(0), Rat(0), Rat(1)});
    Vec<Rat> v = vec_add(lambda, vec_scale(space.beta(), Rat(2)));
    SymVec<Rat> x = projected_power(space, v, n);
    IsotropyVerdict applicable = isotropy_check(space, x, v, hd);
    CHECK(applicable.applicable);
    CHECK(applicable.annihilated);
    CHECK(applicable.holds);
    // nonzero alpha coordinate: vacuous branch with a note
    Vec<Rat> w = vec_add(space.alpha(), space.beta());
    SymVec<Rat> y = projected_power(space, w, n);
    IsotropyVerdict vacuous = isotropy_check(space, y, w, hd);
    CHECK_FALSE(vacuous.applicable);
    CHECK(vacuous.holds);
    CHECK_FALSE(vacuous.notes.empty());
    // the contrast case: sigma moves alpha^n
    SymVec<Rat> an = power(space, space.alpha(), n);
    IsotropyVerdict contrast = isotropy_check(space, an, space.alpha(), hd);
    CHECK_FALSE(contrast.applicable);
    CHECK_FALSE(contrast.annihilated);
}

TEST_CASE("mukai pairing on the model") {
    MukaiSpace space = small_mukai();
    // degree 1: the pairing is the form itself
    SymVec<Rat> a = SymVec<Rat>::linear(space.alpha());
    SymVec<Rat> b = SymVec<Rat>::linear(space.beta());
    CHECK(mukai_pairing(space, a, b) == Rat(-1));
    CHECK(mukai_pairing(space, a, b, Rat(-1)) == Rat(1));  // epsilon convention
    // pure isotropic powers pair to zero with themselves
    SymVec<Rat> an = power(space, space.alpha(), 2);
    CHECK(mukai_pairing(space, an, an) == Rat(0));
    // symmetry
    SymVec<Rat> x = projected_power(space, vec_add(space.alpha(), space.beta()), 2);
    SymVec<Rat> y = projected_power(space, vec_add(space.alpha(), vec_scale(space.beta(), Rat(-2))), 2);
    CHECK(mukai_pairing(space, x, y) == mukai_pairing(space, y, x));
}

TEST_CASE("unique trivial subrepresentation on the model") {
    MukaiSpace space = small_mukai();
    int n = 2;
    Vec<Rat> v = vec_add(space.alpha(), space.beta());  // q(v) = -2, anisotropic
    SymVec<Rat> x = projected_power(space, v, n);
    AnnihilatorReport ann = annihilator(space, x);
    ShModel model = sh_model(space.total(), n, false);
    MonomialBasis basis(space.dim(), n);
    // common kernel of Ann(x) acting on the model
    Mat<Rat> sh_coords(basis.size(), model.dimension());
    for (int j = 0; j < model.dimension(); ++j) {
        Vec<Rat> col = basis.coords(model.basis[j]);
        for (int i = 0; i < basis.size(); ++i) sh_coords.at(i, j) = col[i];
    }
    Mat<Rat> stacked(static_cast<int>(ann.basis.size()) * basis.size(), model.dimension());
    for (size_t k = 0; k < ann.basis.size(); ++k)
        for (int j = 0; j < model.dimension(); ++j) {
            Vec<Rat> col = basis.coords(derivation_action(ann.basis[k], model.basis[j]));
            for (int i = 0; i < basis.size(); ++i)
                stacked.at(static_cast<int>(k) * basis.size() + i, j) = col[i];
        }
    auto kernel = kernel_basis(stacked);
    REQUIRE(kernel.size() == 1);
    // the trivial line is spanned by x itself
    Vec<Rat> x_in_model = *solve(sh_coords, basis.coords(x));
    CHECK(canonical_line(x_in_model) == canonical_line(kernel[0]));
}

TEST_CASE("trivial subrepresentation count for an isotropic witness, reported") {
    // The uniqueness statement is only guaranteed through the codimension
    // argument for anisotropic witnesses; the isotropic case is recorded
    // empirically without being asserted as an invariant.
    MukaiSpace space = small_mukai();
    int n = 2;
    SymVec<Rat> x = power(space, space.alpha(), n);
    AnnihilatorReport ann = annihilator(space, x);
    ShModel model = sh_model(space.total(), n, false);
    MonomialBasis basis(space.dim(), n);
    Mat<Rat> stacked(static_cast<int>(ann.basis.size()) * basis.size(), model.dimension());
    for (size_t k = 0; k < ann.basis.size(); ++k)
        for (int j = 0; j < model.dimension(); ++j) {
            Vec<Rat> col = basis.coords(derivation_action(ann.basis[k], model.basis[j]));
            for (int i = 0; i < basis.size(); ++i)
                stacked.at(static_cast<int>(k) * basis.size() + i, j) = col[i];
        }
    size_t trivial_dim = kernel_basis(stacked).size();
    MESSAGE("isotropic-witness trivial subrepresentations on the model: ", trivial_dim);
    WARN(trivial_dim == 1);
}

TEST_CASE("spherical verdicts from inline presets") {
    SphericalPreset k3n{"k3n", 2, 23, true, "generation input"};
    SphericalVerdict a = spherical_verdict(k3n);
    CHECK(a.excluded);
    CHECK(a.verdict == "no spherical objects");
    SphericalPreset og10{"og10", 5, 24, true, ""};
    CHECK(spherical_verdict(og10).excluded);
    SphericalPreset k3{"k3", 1, 22, false, ""};
    SphericalVerdict c = spherical_verdict(k3);
    CHECK_FALSE(c.excluded);
    CHECK(c.verdict == "not excluded by this criterion");
    SphericalPreset kum{"kum_n", 2, 7, false, ""};
    CHECK_FALSE(spherical_verdict(kum).excluded);
}

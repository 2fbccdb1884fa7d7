#include <doctest.h>

#include "hklat/series.hpp"

using namespace hklat;

namespace {
std::vector<int> exp2(int a, int b) { return {a, b}; }
}  // namespace

TEST_CASE("uniseries engine basics") {
    int d = 12;
    UniSeries x = UniSeries::x(d);
    CHECK(UniSeries::exp_x(d).log() == x);
    UniSeries q = UniSeries::todd_q(d);
    CHECK(q.coeff(0) == Rat(1));
    CHECK(q.coeff(1) == Rat(1, 2));
    CHECK(q.coeff(2) == Rat(1, 12));
    CHECK(q.coeff(3) == Rat(0));
    CHECK(q.coeff(4) == Rat(-1, 720));
    CHECK(q * q.inverse() == UniSeries::constant(Rat(1), d));
    CHECK(q.sqrt() * q.sqrt() == q);
    CHECK_THROWS_AS(x.log(), BadConstantTerm);
    CHECK_THROWS_AS(UniSeries::constant(Rat(1), d).exp(), BadConstantTerm);
    CHECK_THROWS_AS(x.sqrt(), BadConstantTerm);
    CHECK_THROWS_AS(x.inverse(), BadConstantTerm);
}

TEST_CASE("graded series: inverse pairs on the pinned examples") {
    GradedSeries vars = GradedSeries::chern_vars(4, 8);
    GradedSeries one = GradedSeries::constant(vars, Rat(1));
    GradedSeries c2 = GradedSeries::generator(vars, 1);
    GradedSeries s = one + c2.scaled(Rat(1, 12));
    CHECK(s.log().exp() == s);
    GradedSeries mixed = one + GradedSeries::generator(vars, 0) +
                         c2.scaled(Rat(-2, 3)) + GradedSeries::generator(vars, 3).scaled(Rat(5));
    CHECK(mixed.log().exp() == mixed);
    CHECK(mixed.sqrt() * mixed.sqrt() == mixed);
    CHECK(mixed * mixed.inverse() == one);
    CHECK_THROWS_AS(c2.log(), BadConstantTerm);
    CHECK_THROWS_AS((one + one).sqrt(), BadConstantTerm);
}

TEST_CASE("newton power sums") {
    GradedSeries vars = GradedSeries::chern_vars(4, 4);
    GradedSeries total = GradedSeries::constant(vars, Rat(1));
    for (int v = 0; v < 4; ++v) total += GradedSeries::generator(vars, v);
    std::vector<GradedSeries> p = newton_power_sums(total, 4);
    CHECK(p[0] == GradedSeries::generator(vars, 0));  // p1 = c1
    GradedSeries c1 = GradedSeries::generator(vars, 0);
    GradedSeries c2 = GradedSeries::generator(vars, 1);
    CHECK(p[1] == c1 * c1 - c2.scaled(Rat(2)));  // p2 = c1^2 - 2 c2
    // with c1 = c3 = 0: p4 = 2 c2^2 - 4 c4
    GradedSeries even(std::vector<int>{2, 4}, 4);
    GradedSeries etotal = GradedSeries::constant(even, Rat(1)) +
                          GradedSeries::generator(even, 0) + GradedSeries::generator(even, 1);
    std::vector<GradedSeries> pe = newton_power_sums(etotal, 4);
    CHECK(pe[3].coeff(exp2(2, 0)) == Rat(2));
    CHECK(pe[3].coeff(exp2(0, 1)) == Rat(-4));
    CHECK(pe[0].is_zero());  // p1 = c1 = 0
    CHECK(pe[2].is_zero());  // p3 = 0 when odd classes vanish
    // numeric oracle: substitute two explicit roots and compare power sums
    GradedSeries roots(std::vector<int>{1, 1}, 4);
    GradedSeries rtotal =
        (GradedSeries::constant(roots, Rat(1)) + GradedSeries::generator(roots, 0)) *
        (GradedSeries::constant(roots, Rat(1)) + GradedSeries::generator(roots, 1));
    std::vector<GradedSeries> pr = newton_power_sums(rtotal, 4);
    for (int k = 1; k <= 4; ++k) {
        GradedSeries direct(roots.weights(), roots.trunc());
        std::vector<int> ea(2, 0), eb(2, 0);
        ea[0] = k;
        eb[1] = k;
        direct.add_term(ea, Rat(1));
        direct.add_term(eb, Rat(1));
        CHECK(pr[k - 1] == direct);
    }
}

TEST_CASE("todd class and its square root with vanishing odd classes") {
    GradedSeries vars(std::vector<int>{2, 4}, 4);
    GradedSeries total = GradedSeries::constant(vars, Rat(1)) +
                         GradedSeries::generator(vars, 0) + GradedSeries::generator(vars, 1);
    ToddPair td = todd_and_sqrt(total);
    CHECK(td.td.coeff(exp2(1, 0)) == Rat(1, 12));    // td_2 = c2/12
    CHECK(td.td.coeff(exp2(2, 0)) == Rat(3, 720));   // td_4 = (3 c2^2 - c4)/720
    CHECK(td.td.coeff(exp2(0, 1)) == Rat(-1, 720));
    CHECK(td.td_sqrt.coeff(exp2(1, 0)) == Rat(1, 24));
    // 100 * sqrt-part in weight 4: 35/288 c2^2 - 5/72 c4
    CHECK(td.td_sqrt.coeff(exp2(2, 0)) * Rat(100) == Rat(35, 288));
    CHECK(td.td_sqrt.coeff(exp2(0, 1)) * Rat(100) == Rat(-5, 72));
    CHECK(td.td_sqrt * td.td_sqrt == td.td);
    CHECK(td.td * td.td.inverse() == GradedSeries::constant(vars, Rat(1)));
    // with c1 present: td_1 = c1/2
    GradedSeries full = GradedSeries::chern_vars(2, 2);
    GradedSeries gtotal = GradedSeries::constant(full, Rat(1)) +
                          GradedSeries::generator(full, 0) + GradedSeries::generator(full, 1);
    ToddPair tg = todd_and_sqrt(gtotal);
    CHECK(tg.td.coeff({1, 0}) == Rat(1, 2));
    CHECK(tg.td.coeff({2, 0}) == Rat(1, 12));
    CHECK(tg.td.coeff({0, 1}) == Rat(1, 12));
}

TEST_CASE("tangent-bundle expansion reproduces the degree coefficients in n") {
    for (long n = 1; n <= 6; ++n) {
        GradedSeries vt = tangent_mukai_degree4(Rat(n));
        CHECK(vt.coeff({0, 0}) == Rat(2 * n));
        CHECK(vt.coeff(exp2(1, 0)) == Rat(2 * n - 24, 24));
        CHECK(vt.coeff(exp2(2, 0)) == Rat(120 + 7 * n, 2880));
        CHECK(vt.coeff(exp2(0, 1)) == -Rat(120 + n, 720));
    }
    GradedSeries vt2 = tangent_mukai_degree4(Rat(2));
    CHECK(vt2.coeff({0, 0}) == Rat(4));
    CHECK(vt2.coeff(exp2(2, 0)) == Rat(67, 1440));
    CHECK(vt2.coeff(exp2(0, 1)) == Rat(-61, 360));
}

TEST_CASE("fourfold contradiction: the unique exact solution") {
    FourfoldResult r = fourfold_contradiction();
    CHECK(r.c2sq == Rat(576));
    CHECK(r.c4 == Rat(-432));
    CHECK(r.contradiction);
    CHECK(r.reason == "euler_characteristic_negative");
    CHECK(r.beta2_ratio == Rat(100));  // (2n-24)^2/(2n) at n = 2
}

TEST_CASE("fujiki consistency verdicts") {
    // derived inputs for the rank-23, n = 2 lattice: Euler characteristic 324
    FujikiVerdict bad = fujiki_consistency(2, Rat(828), Rat(324));
    CHECK_FALSE(bad.consistent);
    CHECK(bad.verdict == "tangent bundle not atomic");
    CHECK(bad.lhs == Rat(-131, 8));
    CHECK(bad.rhs == Rat(625, 8));
    // the hypothetical solution of the fourfold system is consistent by construction
    FujikiVerdict good = fujiki_consistency(2, Rat(576), Rat(-432));
    CHECK(good.consistent);
    // n = 12 kills the right side entirely
    FujikiVerdict n12 = fujiki_consistency(12, Rat(1), Rat(1));
    CHECK(n12.rhs == Rat(0));
    CHECK_THROWS_AS(fujiki_consistency(1, Rat(1), Rat(1)), BadInput);
}

TEST_CASE("structure-sheaf comparison identity") {
    CHECK(verify_lagrangian_identity(8));
    CHECK(verify_lagrangian_identity(16));
    // order-1 coefficients of both sides are 1
    UniSeries q = UniSeries::todd_q(6);
    UniSeries lhs = q * q.negated_variable().inverse();
    CHECK(lhs.coeff(0) == Rat(1));
    CHECK(lhs.coeff(1) == Rat(1));
}

TEST_CASE("degree-four coefficient matching") {
    CHECK(k_relation(12, Rat(5)) == Rat(0));
    CHECK(k_relation(2, Rat(1)) == Rat(-5));
    CHECK(k_relation(24, Rat(2)) == Rat(1));
    CHECK(k_relation(3, Rat(1, 2)) == Rat(-18, 6) * Rat(1, 2) / Rat(1));  // (6-24)/6 * 1/2
}

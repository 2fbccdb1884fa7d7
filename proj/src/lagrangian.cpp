#include "hklat/lagrangian.hpp"

#include "hklat/series.hpp"

namespace hklat {

LagrangianVerdict lagrangian_atomic(const RestrictionData& rd) {
    LagrangianVerdict v;
    v.restriction_rank = rank(rd.matrix);
    v.rank_one = (v.restriction_rank == 1);
    v.c1_in_image = solve(rd.matrix, rd.c1L).has_value();
    v.atomic = v.rank_one && v.c1_in_image;
    return v;
}

HodgeDiamond::HodgeDiamond(std::vector<std::vector<long>> h) : h_(std::move(h)) {
    if (h_.empty()) throw BadInput("HodgeDiamond: empty");
    size_t n = h_.size();
    for (const auto& row : h_)
        if (row.size() != n) throw BadInput("HodgeDiamond: table must be square");
    for (size_t p = 0; p < n; ++p)
        for (size_t q = 0; q < n; ++q) {
            if (h_[p][q] < 0) throw BadInput("HodgeDiamond: negative entry");
            if (h_[p][q] != h_[q][p]) throw BadInput("HodgeDiamond: h[p][q] != h[q][p]");
        }
    if (h_[0][0] != 1) throw BadInput("HodgeDiamond: h[0][0] must be 1 for connected L");
}

std::vector<long> ext_dims_structure_sheaf(const HodgeDiamond& hd) {
    int n = hd.dim();
    std::vector<long> ext(2 * n + 1, 0);
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) ext[p + q] += hd.at(q, p);
    return ext;
}

EpwIdentityReport epw_class_identities() {
    // Ring Q[h, c2, z] with weights 1, 2, 2; z stands for the pushforward
    // fundamental class and reduces by z = 5 h^2 - c2/3.
    GradedSeries like(std::vector<int>{1, 2, 2}, 4);
    GradedSeries h = GradedSeries::generator(like, 0);
    GradedSeries c2 = GradedSeries::generator(like, 1);
    GradedSeries z = GradedSeries::generator(like, 2);
    GradedSeries z_reduced = h * h * GradedSeries::constant(like, Rat(5)) - c2.scaled(Rat(1, 3));

    auto substitute_z = [&](const GradedSeries& s) {
        GradedSeries out(like.weights(), like.trunc());
        for (const auto& [e, c] : s.terms()) {
            GradedSeries term = GradedSeries::constant(like, c);
            std::vector<int> rest(e);
            rest[2] = 0;
            term = term * [&] {
                GradedSeries mono(like.weights(), like.trunc());
                mono.add_term(rest, Rat(1));
                return mono;
            }();
            for (int t = 0; t < e[2]; ++t) term = term * z_reduced;
            out += term;
        }
        return out;
    };

    EpwIdentityReport report;
    report.identities = {
        "z = 5 h^2 - c2/3  (pushforward fundamental class)",
        "c3 = 9 h z",
        "c4 = z^2 - 63 h^2 z",
    };

    // Well-formedness: the reduced c3 identity is homogeneous of weight 3.
    GradedSeries c3 = substitute_z(h * z.scaled(Rat(9)));
    report.well_formed = !c3.is_zero() && c3 == c3.graded_component(3);

    // Confluence on the c4 identity: reduce z^2 - 63 h^2 z in the two possible
    // orders (inner z first vs. both at once) and compare normal forms.
    GradedSeries c4_direct = substitute_z(z * z - h * h * z.scaled(Rat(63)));
    GradedSeries c4_staged = substitute_z(z_reduced * z - h * h * z.scaled(Rat(63)));
    report.confluent = (c4_direct == c4_staged);

    // Linearity sanity: doubling every identity doubles the normal forms.
    GradedSeries doubled = substitute_z((z * z - h * h * z.scaled(Rat(63))).scaled(Rat(2)));
    report.scaling_consistent = (doubled == c4_direct.scaled(Rat(2)));
    return report;
}

}  // namespace hklat

#pragma once

#include "hklat/symrep.hpp"

namespace hklat {

/// Rational model of a K3-type Hodge structure on the Mukai space: the period
/// sigma = e + i f with q(e) = q(f) > 0 and q(e, f) = 0. Coordinates are H^2
/// coordinates (length b2).
class HodgeData {
public:
    HodgeData(const MukaiSpace& space, Vec<Rat> e, Vec<Rat> f);

    const Vec<Rat>& e() const { return e_; }
    const Vec<Rat>& f() const { return f_; }

    Vec<Rat> e_embedded(const MukaiSpace& space) const { return space.embed(e_); }
    Vec<Rat> f_embedded(const MukaiSpace& space) const { return space.embed(f_); }
    /// sigma = e + i f in full coordinates.
    Vec<GaussRat> sigma(const MukaiSpace& space) const;
    /// conj(sigma) = e - i f in full coordinates.
    Vec<GaussRat> sigma_bar(const MukaiSpace& space) const;

private:
    Vec<Rat> e_, f_;
};

/// The Hodge grading operator h' on the Mukai space: eigenvalue -2 on sigma,
/// +2 on conj(sigma), 0 on the orthogonal complement of the sigma-plane and on
/// alpha, beta. Defined over the Gaussian rationals in the rational basis;
/// q-skew. The sign convention (sigma carries -2) is fixed here once.
Mat<GaussRat> hodge_grading(const MukaiSpace& space, const HodgeData& hd);

/// Basis of the rational subspace of H^2 orthogonal to the sigma-plane,
/// embedded in full coordinates; size b2 - 2.
std::vector<Vec<Rat>> sigma_perp_basis(const MukaiSpace& space, const HodgeData& hd);

/// Basis of { g in so(q)_C : [h', g] = 2g }, the degree-two part for the Hodge
/// grading. Size equals b2; each element is verified against the eigenvalue
/// relation on construction.
std::vector<Mat<GaussRat>> ht2_space(const MukaiSpace& space, const HodgeData& hd);

/// Basis of the so(H^2) block inside so(q): operators vanishing on alpha and
/// beta and skew on H^2; size b2(b2-1)/2.
std::vector<Mat<Rat>> so_h2_subalgebra(const MukaiSpace& space);

struct BracketDegreeReport {
    int dim_geometric = 0;   // (ad h = 0, ad h' = 2) eigenspace
    int dim_kaehler = 0;     // (ad h = 2, ad h' = 0) eigenspace
    bool bijective = false;  // ad(e_sigma) maps the first onto the second
    bool second_step_vanishes = false;  // ad(e_sigma)^2 kills the first
};

/// Checks that ad(e_sigma) carries the (ad h = 0, ad h' = 2) eigenspace of
/// so(q)_C bijectively onto the (ad h = 2, ad h' = 0) eigenspace, and that a
/// second application lands at zero. Both eigenspaces must have dimension
/// b2 - 2.
BracketDegreeReport bracket_degree_check(const MukaiSpace& space, const HodgeData& hd);

}  // namespace hklat

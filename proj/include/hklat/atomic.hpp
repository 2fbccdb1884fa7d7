#pragma once

#include <optional>
#include <string>

#include "hklat/hodge.hpp"

namespace hklat {

struct AnnihilatorReport {
    int dim_ann = 0;
    int codim = 0;
    /// Operators spanning Ann(x) inside so(q); each kills x under the
    /// derivation action.
    std::vector<Mat<Rat>> basis;
};

/// Exact kernel of g -> derivation_action(g, x) restricted to so(q).
/// x = 0 yields the full algebra.
AnnihilatorReport annihilator(const MukaiSpace& space, const SymVec<Rat>& x);

struct AtomicVerdict {
    bool atomic = false;
    std::string criterion;  // "codim" or "obstruction"
    int codim = 0;          // annihilator codimension (codim route)
    int obs_rank = -1;      // image rank of the degree-two contraction (obstruction route)
    std::optional<Vec<Rat>> vtilde;
    std::vector<std::string> notes;
};

/// Codimension criterion: atomic iff the annihilator has codimension b2 + 1.
/// The witness vtilde spans the invariant subspace of the Mukai space under
/// Ann(x); a non-one-dimensional invariant subspace despite the right
/// codimension raises WitnessAmbiguous rather than guessing.
/// Precondition: laplacian(x) = 0.
AtomicVerdict is_atomic_codim(const MukaiSpace& space, const SymVec<Rat>& x);

/// Obstruction criterion: atomic iff the map mu -> derivation_action(mu, x)
/// over the ht2 basis has rank exactly one. Requires x of Hodge type
/// (derivation action of h' kills x); violations raise NotHodgeType.
/// The recovered witness comes from the kernel pairing and is asserted to
/// span a rational line.
AtomicVerdict is_atomic_obstruction(const MukaiSpace& space, const SymVec<Rat>& x,
                                    const HodgeData& hd);

/// Extended vector data: x = a * T((r alpha + c1 + s beta)^n).
struct ExtendedVector {
    Rat r;
    Vec<Rat> c1;  // full coordinates, H^2 block only
    Rat s;
    Rat a;
};

/// Finds (a, s) with x = a T((r alpha + c1 + s beta)^n) exactly, expanding in
/// powers of s and checking consistency of the resulting linear solution.
/// Returns nullopt when no such pair exists. r = 0 raises ZeroRank.
std::optional<ExtendedVector> solve_extended_vector(const MukaiSpace& space, const SymVec<Rat>& x,
                                                    const Rat& r, const Vec<Rat>& c1);

/// Sym^n of an isometry applied to x.
SymVec<Rat> transport(const MukaiSpace& space, const Isometry& g, const SymVec<Rat>& x);

/// transport(exp_cup(-c1/r), x): the integrated twist that removes the H^2
/// component of the extended vector.
SymVec<Rat> kappa_twist(const MukaiSpace& space, const SymVec<Rat>& x, const Rat& r,
                        const Vec<Rat>& c1);

/// True iff the full so(H^2) block annihilates x: the model of staying of
/// Hodge type for every induced complex structure.
bool is_deformation_invariant(const MukaiSpace& space, const SymVec<Rat>& x);

struct ModularityVerdict {
    bool modular = false;
    Rat scalar;  // proportionality factor against the dual-form class model
    std::vector<std::string> notes;
};

/// Extracts the grading-degree (4 - 2n) component of kappa_twist(x, r, c1) and
/// checks it lies on the line of T(alpha^{n-2} * dual form of the H^2 block).
/// Raises NotAtomicError when solve_extended_vector fails.
ModularityVerdict modularity_check(const MukaiSpace& space, const SymVec<Rat>& x, const Rat& r,
                                   const Vec<Rat>& c1);

struct IsotropyVerdict {
    bool applicable = false;   // vtilde has zero alpha coordinate
    bool annihilated = false;  // sigma-plane cup operators kill x
    bool holds = false;        // vacuously true when not applicable
    std::vector<std::string> notes;
};

/// Model-level Chern-class isotropy: when the witness has zero alpha
/// coordinate, the cup operators of the sigma-plane generators must annihilate
/// x. When the alpha coordinate is nonzero the criterion does not apply; the
/// raw annihilation outcome is still reported as the contrast case.
IsotropyVerdict isotropy_check(const MukaiSpace& space, const SymVec<Rat>& x,
                               const Vec<Rat>& vtilde, const HodgeData& hd);

/// epsilon * sym_form(x, y); epsilon is a recorded convention, default +1.
Rat mukai_pairing(const MukaiSpace& space, const SymVec<Rat>& x, const SymVec<Rat>& y,
                  const Rat& epsilon = Rat(1));

struct SphericalPreset {
    std::string name;
    int n = 1;
    int b2 = 0;
    bool generated_below_middle = false;  // cohomology generated in degree < 2n-1
    std::string citation;
};

struct SphericalVerdict {
    std::string preset;
    bool excluded = false;
    std::string verdict;  // "no spherical objects" or "not excluded by this criterion"
    std::vector<std::string> explanation;
};

/// Euler-pairing exclusion: when the cohomology is generated below the middle
/// degree, a spherical object's Mukai vector must vanish, contradicting
/// <v, v> = chi(E, E) = 2.
SphericalVerdict spherical_verdict(const SphericalPreset& preset);

/// Canonical representative of a rational line: integral coordinates with
/// content 1 and positive leading nonzero entry.
Vec<Rat> canonical_line(const Vec<Rat>& v);

}  // namespace hklat

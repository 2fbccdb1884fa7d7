#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hklat/atomic.hpp"

namespace hklat {

/// Deterministic generator independent of the standard library's distribution
/// implementations, so seeded runs are byte-identical everywhere.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    uint64_t next();
    /// Uniform integer in [lo, hi].
    long below(long lo, long hi);
    /// Small rational with numerator in [-bound, bound] and denominator in {1, 2, 3}.
    Rat small_rat(long bound = 3);
    /// Small nonzero rational.
    Rat small_rat_nonzero(long bound = 3);

private:
    uint64_t state_;
};

/// Random nondegenerate symmetric Gram matrix with small entries.
Mat<Rat> random_gram(Rng& rng, int dim);

/// Random test lattice carrying a planted orthogonal pair of equal positive
/// norm (a rational period), hidden by a unimodular change of basis. Returns
/// the base space and the period coordinates.
struct SpaceWithPeriod {
    QuadSpace base;
    Vec<Rat> e;
    Vec<Rat> f;
};
SpaceWithPeriod random_space_with_period(Rng& rng, int b2);

/// Random unipotent-generated isometry of a Mukai space (products of cup
/// exponentials and H^2 reflections).
Isometry random_isometry(Rng& rng, const MukaiSpace& space);

/// Random element of ker(laplacian) cap ker(h') in Sym^n, possibly a planted
/// multiple of T(v^n) for a Hodge-type v (the atomic branch).
SymVec<Rat> random_hodge_harmonic(Rng& rng, const MukaiSpace& space, const HodgeData& hd, int n,
                                  bool plant_atomic);

struct PropertyResult {
    std::string name;
    int instances = 0;
    int failures = 0;
};

struct SuiteConfig {
    uint64_t seed = 20240607;
    int instances = 100;
    int b2_min = 2;
    int b2_max = 5;
    int n_min = 2;
    int n_max = 3;
    /// Debug canary: flips the sign of the cross-variable contraction term
    /// inside the suite's Laplacian path; a healthy suite must then fail.
    bool inject_laplacian_fault = false;
};

struct SuiteReport {
    uint64_t seed = 0;
    std::vector<PropertyResult> results;
    bool ok = false;
    double seconds = 0.0;
};

/// Runs every randomized invariant suite; deterministic for a fixed config.
SuiteReport run_suite(const SuiteConfig& config);

struct EquivalenceConfig {
    uint64_t seed = 20240607;
    int instances = 200;
    std::vector<int> b2_list{3, 4, 5};
    std::vector<int> n_list{2, 3};
};

struct EquivalenceReport {
    int instances = 0;
    int disagreements = 0;
    int atomic_count = 0;
    bool ok = false;
    double seconds = 0.0;
};

/// Criterion equivalence: the codimension test and the obstruction-rank test
/// must agree on every seeded Hodge-type harmonic instance.
EquivalenceReport run_criterion_equivalence(const EquivalenceConfig& config);

}  // namespace hklat

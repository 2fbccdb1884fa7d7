#pragma once

#include <string>
#include <vector>

#include "hklat/matrix.hpp"

namespace hklat {

/// Linear-algebra interface of the Lagrangian criterion: the restriction map
/// on second cohomology in chosen bases, plus the first Chern class of the
/// submanifold in the target coordinates.
struct RestrictionData {
    Mat<Rat> matrix;  // column count = b2 of the ambient manifold
    Vec<Rat> c1L;
};

struct LagrangianVerdict {
    bool rank_one = false;
    bool c1_in_image = false;
    bool atomic = false;
    int restriction_rank = 0;
};

/// Atomic iff the restriction has rank one and c1(L) lies in its image.
LagrangianVerdict lagrangian_atomic(const RestrictionData& rd);

/// Hodge diamond h[p][q] of an n_L-dimensional compact manifold.
class HodgeDiamond {
public:
    explicit HodgeDiamond(std::vector<std::vector<long>> h);

    int dim() const { return static_cast<int>(h_.size()) - 1; }
    long at(int p, int q) const { return h_.at(p).at(q); }

private:
    std::vector<std::vector<long>> h_;
};

/// Self-Ext dimensions of the pushforward structure sheaf via adjunction and
/// the identification of the normal bundle with the cotangent bundle:
/// ext^k = sum_{p+q=k} h^{q,p}.
std::vector<long> ext_dims_structure_sheaf(const HodgeDiamond& hd);

struct EpwIdentityReport {
    bool well_formed = false;
    bool confluent = false;
    bool scaling_consistent = false;
    std::vector<std::string> identities;
};

/// Replays the double-EPW class identities as rewrite checks in the symbolic
/// ring Q[h, c2, z] with z reduced by the fundamental-class identity.
EpwIdentityReport epw_class_identities();

}  // namespace hklat

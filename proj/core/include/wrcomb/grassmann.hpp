#pragma once

#include "wrcomb/combinant.hpp"
#include "wrcomb/subspace.hpp"

#include <optional>
#include <vector>

namespace wrcomb {

// A point of the projective space the combinant vectors live in, stored in a
// normalized representation: the concatenated component coefficients are
// scaled to coprime integers with a positive leading nonzero entry, so two
// proportional vectors normalize to the identical coordinate list.
class ProjectivePoint {
public:
    explicit ProjectivePoint(const CombinantVector& e);

    int r() const { return r_; }
    int d() const { return d_; }
    const std::vector<int>& slot_qs() const { return slots_; }
    const std::vector<Rational>& coordinates() const { return coords_; }

    bool operator==(const ProjectivePoint&) const = default;

private:
    int r_ = 0;
    int d_ = 0;
    std::vector<int> slots_;
    std::vector<Rational> coords_;
};

// Points must belong to the same (r, d); comparing across shapes is an error.
bool equal_points(const ProjectivePoint& a, const ProjectivePoint& b);

// The embedding of the Grassmannian of r-dimensional subspaces of order-d
// forms: a subspace's combinant vector up to scale.
ProjectivePoint pluecker_point(const Subspace& subspace);

// Necessary rank test for membership in the image of the embedding:
// combinant vectors of genuine subspaces satisfy rank(psi) <= d - r + 1.
// When the test passes the recovery result is attached, which pins down the
// preimage subspace and scale.
struct MembershipVerdict {
    std::size_t rank = 0;
    std::size_t kernel_dim = 0;
    std::size_t rank_bound = 0; // d - r + 1
    bool in_image = false;
    std::optional<SubspaceRecovery> recovery;
};
MembershipVerdict image_membership(const CombinantVector& e);

} // namespace wrcomb

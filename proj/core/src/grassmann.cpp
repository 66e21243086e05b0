#include "wrcomb/grassmann.hpp"

#include "wrcomb/errors.hpp"

#include <utility>

namespace wrcomb {

ProjectivePoint::ProjectivePoint(const CombinantVector& e) : r_(e.r()), d_(e.d()) {
    if (e.is_zero())
        throw PreconditionError("the zero vector has no projective point");

    for (const auto& [q, f] : e.components()) {
        slots_.push_back(q);
        for (const Rational& c : f.coeffs())
            coords_.push_back(c);
    }

    // Clear denominators, then divide out the common content.
    mpz_class lcm(1);
    for (const Rational& c : coords_)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
    mpz_class gcd(0);
    std::vector<mpz_class> ints;
    ints.reserve(coords_.size());
    for (const Rational& c : coords_) {
        mpz_class v = c.numerator() * (lcm / c.denominator());
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), v.get_mpz_t());
        ints.push_back(std::move(v));
    }
    int lead_sign = 0;
    for (const mpz_class& v : ints)
        if (sgn(v) != 0) {
            lead_sign = sgn(v);
            break;
        }
    for (std::size_t i = 0; i < ints.size(); ++i) {
        mpz_class v = ints[i] / gcd;
        if (lead_sign < 0)
            v = -v;
        coords_[i] = Rational(v);
    }
}

bool equal_points(const ProjectivePoint& a, const ProjectivePoint& b) {
    if (a.r() != b.r() || a.d() != b.d())
        throw PreconditionError("points live on different Grassmannians");
    return a == b;
}

ProjectivePoint pluecker_point(const Subspace& subspace) {
    return ProjectivePoint(wronskian_combinants(subspace));
}

MembershipVerdict image_membership(const CombinantVector& e) {
    if (e.is_zero())
        throw PreconditionError("combinant vector is identically zero");

    Matrix null = kernel(psi_matrix(e));
    MembershipVerdict v;
    v.kernel_dim = null.rows();
    v.rank = static_cast<std::size_t>(e.d()) + 1 - null.rows();
    v.rank_bound = static_cast<std::size_t>(e.d() - e.r()) + 1;
    v.in_image = v.rank <= v.rank_bound;
    if (v.in_image)
        v.recovery = recover_subspace(e);
    return v;
}

} // namespace wrcomb

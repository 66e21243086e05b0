#pragma once

#include "wrcomb/binary_form.hpp"
#include "wrcomb/matrix.hpp"
#include "wrcomb/subspace.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wrcomb {

// The Wronskian combinants of r independent forms of order d form a vector
// indexed by q in {0} union {2..r}; component q has order r(d-r+1) - 2q.
// Slots whose order would be negative are absent. There is no q = 1 slot:
// that coefficient of the defining expansion vanishes identically.
class CombinantVector {
public:
    CombinantVector(int r, int d, std::map<int, BinaryForm> components);

    static CombinantVector zero(int r, int d);
    static int component_order(int r, int d, int q) { return r * (d - r + 1) - 2 * q; }
    // The q values present for parameters (r, d), ascending.
    static std::vector<int> slots(int r, int d);

    int r() const { return r_; }
    int d() const { return d_; }
    const std::map<int, BinaryForm>& components() const { return components_; }
    const BinaryForm& at(int q) const;

    bool is_zero() const;
    CombinantVector scaled(const Rational& k) const;

    bool operator==(const CombinantVector&) const = default;

private:
    int r_ = 0;
    int d_ = 0;
    std::map<int, BinaryForm> components_;
};

// Linear map between coefficient spaces of binary forms; columns are indexed
// by the domain basis monomials x1^(domain_order - j) x2^j.
struct LinearMap {
    int domain_order = 0;
    int codomain_order = 0;
    Matrix mat; // (codomain_order + 1) x (domain_order + 1)
};

// Solver for the defining identity of the combinants,
//
//   W(A_1, ..., A_r, F) = sum_q (C_q, F)_(r-q)   for all F of order d,
//
// set up once per (r, d): equating coefficients over the basis monomials
// F = x1^(d-j) x2^j gives a linear system in the unknown components whose
// matrix does not depend on the A_i. The system has full column rank, which
// the constructor verifies; extraction is then a fixed back-substitution
// plus a full residual check of every equation.
//
// Slots with q > r(d-r) exist only in the degenerate case d = r; their
// transvectant against any F of order d vanishes identically, so the system
// cannot see them and they are pinned to the zero form.
//
// With include_q1_slot the system is enlarged by a hypothetical q = 1
// component; extraction then checks that the solver returns exactly zero in
// that slot (requires r < d, where the slot's map is nonzero).
class CombinantExtractor {
public:
    CombinantExtractor(int r, int d, bool include_q1_slot = false);

    int r() const { return r_; }
    int d() const { return d_; }

    // forms.size() must be r, all of order d. Dependent forms produce the
    // all-zero vector. include_q1_slot mode additionally verifies the q = 1
    // component comes out identically zero.
    CombinantVector extract(std::span<const BinaryForm> forms) const;

private:
    int r_ = 0;
    int d_ = 0;
    bool include_q1_ = false;
    std::vector<int> solved_; // slots determined by the system, ascending
    std::size_t cols_ = 0;
    Matrix system_;                        // all equations, for the residual check
    std::vector<std::size_t> pivot_rows_;  // independent row subset, one per column
    Matrix solver_;                        // inverse of the pivot-row block
};

// Process-wide memoized extractor per (r, d): the system only depends on the
// parameters, so repeated extractions share the one-time setup cost.
const CombinantExtractor& shared_extractor(int r, int d, bool include_q1_slot = false);

// C(A_1, ..., A_r) for independent forms in the presented basis; dependent
// forms yield the zero vector. Requires 1 <= r <= d.
CombinantVector wronskian_combinants(std::span<const BinaryForm> forms);

// Combinants of the canonical basis of the subspace; this is the
// representative-independent version (any basis of the same subspace gives
// the identical result).
CombinantVector wronskian_combinants(const Subspace& subspace);

// psi_E(F) = sum_q (E_q, F)_(r-q), a linear map from order-d forms to forms
// of order (r+1)(d-r).
BinaryForm psi_apply(const CombinantVector& e, const BinaryForm& f);
LinearMap psi_matrix(const CombinantVector& e);

// Canonical basis (reduced row echelon rows) of the kernel of the map.
Matrix kernel(const LinearMap& m);

// Gamma_p(B; A_1, ..., A_r) =
//   sum_i (-1)^(i+1) (B, A_i)_p * W(A_1, ..., omit A_i, ..., A_r)
// for 0 <= p <= min(order B, order A). For r = 1 the deleted Wronskian is
// the empty product, i.e. the constant 1.
BinaryForm gamma(const BinaryForm& b, std::span<const BinaryForm> forms, int p);

// The three identities satisfied by Gamma_p: vanishing for p <= r-2,
// Gamma_(r-1) = (-1)^(r-1) B W, and Gamma_r = (-1)^(r-1) r (B, W)_1.
struct KeypropReport {
    bool vanishing_below = false;
    bool product_identity = false;
    bool transvectant_identity = false;
    bool all() const { return vanishing_below && product_identity && transvectant_identity; }
};
KeypropReport verify_keyprop(const BinaryForm& b, std::span<const BinaryForm> forms);

// Inverse direction: a combinant vector E determines a subspace when
// ker(psi_E) has dimension exactly r; E is then a single nonzero multiple of
// the combinants of that kernel.
struct SubspaceRecovery {
    enum class Status { recovered, not_in_image };
    Status status = Status::not_in_image;
    std::size_t rank = 0;
    std::size_t kernel_dim = 0;
    std::optional<Subspace> subspace; // set when recovered
    Rational scale;                   // E = scale * C(subspace)
    std::string reason;               // set when not recovered
};
SubspaceRecovery recover_subspace(const CombinantVector& e);

// Writes target as a linear combination of the candidate forms (all of one
// common order) when possible. Free coordinates of an underdetermined system
// are pinned to zero, so the answer is deterministic.
struct BasisExpression {
    bool in_span = false;
    std::vector<Rational> coefficients;
    bool candidates_independent = false;
};
BasisExpression express_in_basis(const BinaryForm& target,
                                 std::span<const BinaryForm> candidates);

} // namespace wrcomb

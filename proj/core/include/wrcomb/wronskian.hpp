#pragma once

#include "wrcomb/binary_form.hpp"

#include <span>
#include <vector>

namespace wrcomb {

// Wronskian of s forms of common order n:
//
//   W(F_1, ..., F_s) = ((n-s+1)!/n!)^s * det( d^(s-1) F_i / dx1^(s-j) dx2^(j-1) )
//
// with i, j = 1..s. The result has order s(n-s+1) and vanishes exactly when
// the forms are linearly dependent. Requires 1 <= s <= n+1 and equal orders;
// W(F) = F for a single form.
BinaryForm wronskian(std::span<const BinaryForm> forms);

// Rank test on the coefficient matrix; the independent counterpart to the
// vanishing of the Wronskian.
bool is_dependent(std::span<const BinaryForm> forms);

// Fixes F_1..F_r once and evaluates F |-> W(F_1, ..., F_r, F) by cofactor
// expansion along the last row, so the r x r minors are computed a single
// time. Agrees with wronskian() on the concatenated list.
class BorderedWronskian {
public:
    explicit BorderedWronskian(std::span<const BinaryForm> head);

    // Order of W(head..., f) for f of the head's order.
    int result_order() const { return result_order_; }

    BinaryForm operator()(const BinaryForm& f) const;

private:
    int n_ = 0;          // common order of all arguments
    int s_ = 0;          // head size + 1
    int result_order_ = 0;
    Rational prefactor_;
    std::vector<BinaryForm> minors_; // minor j omits derivative column j
};

} // namespace wrcomb

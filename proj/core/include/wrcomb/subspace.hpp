#pragma once

#include "wrcomb/binary_form.hpp"
#include "wrcomb/matrix.hpp"

#include <span>
#include <vector>

namespace wrcomb {

// An r-dimensional subspace of the order-d forms, stored by its canonical
// basis: the reduced row echelon form of any spanning matrix. Two subspaces
// are equal exactly when their canonical matrices agree entry for entry.
class Subspace {
public:
    // Spanning forms must be linearly independent; this is the canonicalize
    // entry point, so presented order and basis scaling do not matter.
    static Subspace from_forms(std::span<const BinaryForm> forms);

    // Rows must already be reduced row echelon of full rank (as produced by
    // Matrix::rref or Matrix::nullspace).
    static Subspace from_canonical(const Matrix& rows, int order);

    int dim() const { return static_cast<int>(canonical_.rows()); }
    int form_order() const { return order_; }

    const Matrix& canonical() const { return canonical_; }
    const std::vector<BinaryForm>& basis() const { return basis_; }

    bool operator==(const Subspace&) const = default;

private:
    Subspace() = default;

    int order_ = 0;
    Matrix canonical_;
    std::vector<BinaryForm> basis_; // canonical_ rows as forms
};

inline Subspace canonicalize(std::span<const BinaryForm> forms) {
    return Subspace::from_forms(forms);
}

} // namespace wrcomb

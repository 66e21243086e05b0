#pragma once

#include "wrcomb/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace wrcomb {

// Dense matrix over the rationals. Everything here is exact; the only
// elimination used is fraction-full Gauss-Jordan, which is fine at the sizes
// this library deals with (a few hundred rows at most).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const Matrix&) const = default;

    // Reduced row echelon form, in place. Pivots are scaled to 1 and are the
    // only nonzero entries in their columns, so the result is the canonical
    // representative of the row space. Returns the pivot column indices.
    std::vector<std::size_t> rref();

    std::size_t rank() const;

    // Canonical basis of the right nullspace: the rows of the returned matrix
    // are themselves in reduced row echelon form, so equal nullspaces compare
    // equal entry for entry.
    Matrix nullspace() const;

    struct Solution {
        bool consistent = false;
        std::vector<Rational> values; // free coordinates pinned to zero
        std::size_t rank = 0;
        bool unique = false;
    };
    // Solves M x = rhs by elimination on the augmented matrix.
    Solution solve(std::span<const Rational> rhs) const;

    std::vector<Rational> apply(std::span<const Rational> v) const;

    // Square matrices only; throws when singular.
    Matrix inverse() const;
    Rational determinant() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

} // namespace wrcomb

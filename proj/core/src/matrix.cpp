#include "wrcomb/matrix.hpp"

#include "wrcomb/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace wrcomb {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

std::vector<std::size_t> Matrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols_ && lead < rows_; ++col) {
        std::size_t pivot = lead;
        while (pivot < rows_ && at(pivot, col).is_zero())
            ++pivot;
        if (pivot == rows_)
            continue;
        if (pivot != lead)
            for (std::size_t c = 0; c < cols_; ++c)
                std::swap(at(pivot, c), at(lead, c));
        Rational inv = Rational(1) / at(lead, col);
        for (std::size_t c = col; c < cols_; ++c)
            at(lead, c) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == lead || at(r, col).is_zero())
                continue;
            Rational f = at(r, col);
            for (std::size_t c = col; c < cols_; ++c)
                at(r, c) -= f * at(lead, c);
        }
        pivots.push_back(col);
        ++lead;
    }
    return pivots;
}

std::size_t Matrix::rank() const {
    Matrix m = *this;
    return m.rref().size();
}

Matrix Matrix::nullspace() const {
    Matrix m = *this;
    std::vector<std::size_t> pivots = m.rref();

    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : pivots)
        is_pivot[p] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);

    Matrix basis(free_cols.size(), cols_);
    for (std::size_t i = 0; i < free_cols.size(); ++i) {
        basis.at(i, free_cols[i]) = 1;
        for (std::size_t p = 0; p < pivots.size(); ++p)
            basis.at(i, pivots[p]) = -m.at(p, free_cols[i]);
    }
    // The standard basis above is independent but not reduced; one more
    // elimination pass makes the representation canonical.
    basis.rref();
    return basis;
}

Matrix::Solution Matrix::solve(std::span<const Rational> rhs) const {
    if (rhs.size() != rows_)
        throw PreconditionError("right-hand side length does not match row count");
    Matrix aug(rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            aug.at(r, c) = at(r, c);
        aug.at(r, cols_) = rhs[r];
    }
    std::vector<std::size_t> pivots = aug.rref();

    Solution sol;
    sol.values.assign(cols_, Rational(0));
    if (!pivots.empty() && pivots.back() == cols_) {
        sol.consistent = false;
        sol.rank = pivots.size() - 1;
        return sol;
    }
    sol.consistent = true;
    sol.rank = pivots.size();
    sol.unique = pivots.size() == cols_;
    for (std::size_t p = 0; p < pivots.size(); ++p)
        sol.values[pivots[p]] = aug.at(p, cols_);
    return sol;
}

std::vector<Rational> Matrix::apply(std::span<const Rational> v) const {
    if (v.size() != cols_)
        throw PreconditionError("vector length does not match column count");
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational acc;
        for (std::size_t c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero() && !v[c].is_zero())
                acc += at(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_)
        throw PreconditionError("inverse of a non-square matrix");
    Matrix aug(rows_, 2 * cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            aug.at(r, c) = at(r, c);
        aug.at(r, cols_ + r) = 1;
    }
    std::vector<std::size_t> pivots = aug.rref();
    if (pivots.size() != rows_ || pivots.back() != rows_ - 1)
        throw std::logic_error("matrix is singular");
    Matrix inv(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            inv.at(r, c) = aug.at(r, cols_ + c);
    return inv;
}

Rational Matrix::determinant() const {
    if (rows_ != cols_)
        throw PreconditionError("determinant of a non-square matrix");
    Matrix m = *this;
    Rational det(1);
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t pivot = col;
        while (pivot < rows_ && m.at(pivot, col).is_zero())
            ++pivot;
        if (pivot == rows_)
            return Rational(0);
        if (pivot != col) {
            for (std::size_t c = 0; c < cols_; ++c)
                std::swap(m.at(pivot, c), m.at(col, c));
            det = -det;
        }
        det *= m.at(col, col);
        Rational inv = Rational(1) / m.at(col, col);
        for (std::size_t r = col + 1; r < rows_; ++r) {
            if (m.at(r, col).is_zero())
                continue;
            Rational f = m.at(r, col) * inv;
            for (std::size_t c = col; c < cols_; ++c)
                m.at(r, c) -= f * m.at(col, c);
        }
    }
    return det;
}

} // namespace wrcomb

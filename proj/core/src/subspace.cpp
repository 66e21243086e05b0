#include "wrcomb/subspace.hpp"

#include "wrcomb/errors.hpp"

#include <utility>

namespace wrcomb {

namespace {

std::vector<BinaryForm> rows_as_forms(const Matrix& m, int order) {
    std::vector<BinaryForm> out;
    out.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::vector<Rational> coeffs(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c)
            coeffs[c] = m.at(r, c);
        out.emplace_back(order, std::move(coeffs));
    }
    return out;
}

} // namespace

Subspace Subspace::from_forms(std::span<const BinaryForm> forms) {
    if (forms.empty())
        throw PreconditionError("subspace requires at least one form");
    int d = forms[0].order();
    for (const BinaryForm& f : forms)
        if (f.order() != d)
            throw PreconditionError("subspace requires equal orders");

    Matrix m(forms.size(), static_cast<std::size_t>(d) + 1);
    for (std::size_t i = 0; i < forms.size(); ++i)
        for (int j = 0; j <= d; ++j)
            m.at(i, static_cast<std::size_t>(j)) = forms[i].coeff(j);
    m.rref();

    // rref keeps the row count; independence means no zero rows appeared
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!m.at(m.rows() - 1, c).is_zero())
            return from_canonical(m, d);
    throw PreconditionError("subspace basis is linearly dependent");
}

Subspace Subspace::from_canonical(const Matrix& rows, int order) {
    if (rows.rows() == 0 || rows.cols() != static_cast<std::size_t>(order) + 1)
        throw PreconditionError("canonical matrix shape does not match order");
    Matrix check = rows;
    if (check.rref().size() != rows.rows() || check != rows)
        throw PreconditionError("matrix is not a reduced full-rank basis");
    Subspace s;
    s.order_ = order;
    s.canonical_ = rows;
    s.basis_ = rows_as_forms(rows, order);
    return s;
}

} // namespace wrcomb

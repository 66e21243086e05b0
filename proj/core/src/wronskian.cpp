#include "wrcomb/wronskian.hpp"

#include "wrcomb/errors.hpp"
#include "wrcomb/matrix.hpp"

#include <string>
#include <utility>

namespace wrcomb {

namespace {

int common_order(std::span<const BinaryForm> forms, const char* what) {
    if (forms.empty())
        throw PreconditionError(std::string(what) + " requires at least one form");
    int n = forms[0].order();
    for (const BinaryForm& f : forms)
        if (f.order() != n)
            throw PreconditionError(std::string(what) + " requires equal orders");
    return n;
}

// Determinant of a square matrix of forms whose entries all have order
// entry_order, by cofactor expansion. rows holds the still-active row
// indices; expansion walks the columns left to right.
BinaryForm form_det(const std::vector<std::vector<BinaryForm>>& m,
                    std::vector<std::size_t>& rows, std::size_t col,
                    int entry_order) {
    if (rows.empty())
        return BinaryForm(0, {Rational(1)});
    BinaryForm acc(static_cast<int>(rows.size()) * entry_order);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const BinaryForm& entry = m[rows[i]][col];
        if (entry.is_zero())
            continue;
        std::size_t row = rows[i];
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(i));
        BinaryForm minor = form_det(m, rows, col + 1, entry_order);
        rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(i), row);
        BinaryForm term = entry * minor;
        if (i % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

} // namespace

BinaryForm wronskian(std::span<const BinaryForm> forms) {
    int n = common_order(forms, "wronskian");
    int s = static_cast<int>(forms.size());
    if (s > n + 1)
        throw PreconditionError("wronskian of " + std::to_string(s)
                                + " forms of order " + std::to_string(n)
                                + " (at most " + std::to_string(n + 1)
                                + " can be independent)");

    int e = n - s + 1; // order of every derivative entry
    std::vector<std::vector<BinaryForm>> m;
    m.reserve(forms.size());
    for (const BinaryForm& f : forms) {
        std::vector<BinaryForm> row;
        row.reserve(forms.size());
        for (int j = 0; j < s; ++j)
            row.push_back(f.derivative(s - 1 - j, j));
        m.push_back(std::move(row));
    }
    std::vector<std::size_t> rows(forms.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        rows[i] = i;
    BinaryForm det = form_det(m, rows, 0, e);

    Rational pre = Rational::pow(
        Rational::factorial(static_cast<unsigned long>(e))
            / Rational::factorial(static_cast<unsigned long>(n)),
        static_cast<unsigned long>(s));
    return pre * det;
}

bool is_dependent(std::span<const BinaryForm> forms) {
    int n = common_order(forms, "dependence test");
    Matrix m(forms.size(), static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 0; i < forms.size(); ++i)
        for (int j = 0; j <= n; ++j)
            m.at(i, static_cast<std::size_t>(j)) = forms[i].coeff(j);
    return m.rank() < forms.size();
}

BorderedWronskian::BorderedWronskian(std::span<const BinaryForm> head) {
    n_ = common_order(head, "bordered wronskian");
    s_ = static_cast<int>(head.size()) + 1;
    if (s_ > n_ + 1)
        throw PreconditionError("bordered wronskian exceeds the space dimension");

    int e = n_ - s_ + 1;
    std::vector<std::vector<BinaryForm>> m;
    m.reserve(head.size());
    for (const BinaryForm& f : head) {
        std::vector<BinaryForm> row;
        row.reserve(static_cast<std::size_t>(s_));
        for (int j = 0; j < s_; ++j)
            row.push_back(f.derivative(s_ - 1 - j, j));
        m.push_back(std::move(row));
    }
    // minor j: all head rows, every derivative column except j
    minors_.reserve(static_cast<std::size_t>(s_));
    for (int j = 0; j < s_; ++j) {
        std::vector<std::vector<BinaryForm>> sub;
        sub.reserve(m.size());
        for (const auto& row : m) {
            std::vector<BinaryForm> r;
            r.reserve(row.size() - 1);
            for (int c = 0; c < s_; ++c)
                if (c != j)
                    r.push_back(row[static_cast<std::size_t>(c)]);
            sub.push_back(std::move(r));
        }
        std::vector<std::size_t> rows(sub.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            rows[i] = i;
        minors_.push_back(form_det(sub, rows, 0, e));
    }
    prefactor_ = Rational::pow(
        Rational::factorial(static_cast<unsigned long>(e))
            / Rational::factorial(static_cast<unsigned long>(n_)),
        static_cast<unsigned long>(s_));
    result_order_ = s_ * e;
}

BinaryForm BorderedWronskian::operator()(const BinaryForm& f) const {
    if (f.order() != n_)
        throw PreconditionError("bordered wronskian argument has order "
                                + std::to_string(f.order()) + ", expected "
                                + std::to_string(n_));
    BinaryForm acc(result_order_);
    for (int j = 0; j < s_; ++j) {
        const BinaryForm& minor = minors_[static_cast<std::size_t>(j)];
        if (minor.is_zero())
            continue;
        BinaryForm term = minor * f.derivative(s_ - 1 - j, j);
        if ((s_ - 1 + j) % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return prefactor_ * acc;
}

} // namespace wrcomb

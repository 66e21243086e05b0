#include "wrcomb/binary_form.hpp"

#include "wrcomb/errors.hpp"

#include <string>
#include <utility>

namespace wrcomb {

namespace {

std::string order_mismatch(int a, int b) {
    return "order mismatch: " + std::to_string(a) + " vs " + std::to_string(b);
}

// (m)(m-1)...(m-k+1) as an exact rational
Rational falling(int m, int k) {
    Rational out(1);
    for (int i = 0; i < k; ++i)
        out *= Rational(m - i);
    return out;
}

} // namespace

Mat2::Mat2(Rational a_, Rational b_, Rational c_, Rational d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (det().is_zero())
        throw PreconditionError("singular substitution matrix");
}

BinaryForm::BinaryForm(int order) : order_(order) {
    if (order < 0)
        throw PreconditionError("negative form order");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

BinaryForm::BinaryForm(int order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    if (order < 0)
        throw PreconditionError("negative form order");
    if (coeffs_.size() != static_cast<std::size_t>(order) + 1)
        throw PreconditionError("coefficient count does not match order "
                                + std::to_string(order));
}

BinaryForm BinaryForm::monomial(int order, int x2_degree, Rational c) {
    if (x2_degree < 0 || x2_degree > order)
        throw PreconditionError("monomial exponent out of range");
    BinaryForm f(order);
    f.coeffs_[static_cast<std::size_t>(x2_degree)] = std::move(c);
    return f;
}

BinaryForm BinaryForm::from_binomial(int order, std::span<const Rational> weighted) {
    if (weighted.size() != static_cast<std::size_t>(order) + 1)
        throw PreconditionError("coefficient count does not match order "
                                + std::to_string(order));
    std::vector<Rational> raw(weighted.size());
    for (int j = 0; j <= order; ++j)
        raw[static_cast<std::size_t>(j)] =
            Rational::binomial(static_cast<unsigned long>(order),
                               static_cast<unsigned long>(j))
            * weighted[static_cast<std::size_t>(j)];
    return BinaryForm(order, std::move(raw));
}

const Rational& BinaryForm::coeff(int j) const {
    if (j < 0 || j > order_)
        throw PreconditionError("coefficient index out of range");
    return coeffs_[static_cast<std::size_t>(j)];
}

bool BinaryForm::is_zero() const {
    for (const Rational& c : coeffs_)
        if (!c.is_zero())
            return false;
    return true;
}

std::vector<Rational> BinaryForm::binomial_coeffs() const {
    std::vector<Rational> out(coeffs_.size());
    for (int j = 0; j <= order_; ++j)
        out[static_cast<std::size_t>(j)] =
            coeffs_[static_cast<std::size_t>(j)]
            / Rational::binomial(static_cast<unsigned long>(order_),
                                 static_cast<unsigned long>(j));
    return out;
}

BinaryForm BinaryForm::derivative(int k1, int k2) const {
    if (k1 < 0 || k2 < 0)
        throw PreconditionError("negative derivative order");
    if (k1 + k2 > order_)
        return BinaryForm(0);
    int m = order_ - k1 - k2;
    BinaryForm out(m);
    for (int t = 0; t <= m; ++t) {
        // source monomial x1^(order-j) x2^j with j = t + k2
        int j = t + k2;
        Rational f = falling(j, k2) * falling(order_ - j, k1);
        out.coeffs_[static_cast<std::size_t>(t)] =
            coeffs_[static_cast<std::size_t>(j)] * f;
    }
    return out;
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& o) {
    if (order_ != o.order_)
        throw PreconditionError(order_mismatch(order_, o.order_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    return *this;
}

BinaryForm& BinaryForm::operator-=(const BinaryForm& o) {
    if (order_ != o.order_)
        throw PreconditionError(order_mismatch(order_, o.order_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    return *this;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    BinaryForm out(a.order_ + b.order_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero())
                continue;
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out;
}

BinaryForm operator*(const Rational& s, BinaryForm f) {
    for (Rational& c : f.coeffs_)
        c *= s;
    return f;
}

BinaryForm BinaryForm::operator-() const {
    return Rational(-1) * *this;
}

BinaryForm BinaryForm::substitute(const Mat2& g) const {
    // f(a x1 + b x2, c x1 + d x2) via powers of the two substituted variables
    BinaryForm l1(1, {g.a, g.b});
    BinaryForm l2(1, {g.c, g.d});
    std::vector<BinaryForm> p1, p2;
    p1.reserve(coeffs_.size());
    p2.reserve(coeffs_.size());
    p1.emplace_back(0, std::vector<Rational>{Rational(1)});
    p2.emplace_back(0, std::vector<Rational>{Rational(1)});
    for (int k = 1; k <= order_; ++k) {
        p1.push_back(p1.back() * l1);
        p2.push_back(p2.back() * l2);
    }
    BinaryForm out(order_);
    for (int j = 0; j <= order_; ++j) {
        const Rational& c = coeffs_[static_cast<std::size_t>(j)];
        if (c.is_zero())
            continue;
        out += c * (p1[static_cast<std::size_t>(order_ - j)]
                    * p2[static_cast<std::size_t>(j)]);
    }
    return out;
}

BiForm BinaryForm::polarize(int k) const {
    if (k < 0 || k > order_)
        throw PreconditionError("polarization degree out of range");
    BiForm out(order_ - k, k);
    Rational pre = Rational::factorial(static_cast<unsigned long>(order_ - k))
                   / Rational::factorial(static_cast<unsigned long>(order_));
    for (int i = 0; i <= k; ++i) {
        BinaryForm d = derivative(k - i, i);
        Rational w = pre * Rational::binomial(static_cast<unsigned long>(k),
                                              static_cast<unsigned long>(i));
        for (int t = 0; t <= order_ - k; ++t)
            out.at(t, i) += w * d.coeff(t);
    }
    return out;
}

BiForm::BiForm(int xorder, int yorder) : xorder_(xorder), yorder_(yorder) {
    if (xorder < 0 || yorder < 0)
        throw PreconditionError("negative form order");
    coeffs_.assign(static_cast<std::size_t>(xorder + 1)
                       * static_cast<std::size_t>(yorder + 1),
                   Rational(0));
}

Rational& BiForm::at(int i, int j) {
    if (i < 0 || i > xorder_ || j < 0 || j > yorder_)
        throw PreconditionError("coefficient index out of range");
    return coeffs_[static_cast<std::size_t>(i)
                       * static_cast<std::size_t>(yorder_ + 1)
                   + static_cast<std::size_t>(j)];
}

const Rational& BiForm::at(int i, int j) const {
    return const_cast<BiForm*>(this)->at(i, j);
}

BinaryForm BiForm::restitution() const {
    BinaryForm out(xorder_ + yorder_);
    std::vector<Rational> acc(static_cast<std::size_t>(xorder_ + yorder_) + 1,
                              Rational(0));
    for (int i = 0; i <= xorder_; ++i)
        for (int j = 0; j <= yorder_; ++j)
            acc[static_cast<std::size_t>(i + j)] += at(i, j);
    return BinaryForm(xorder_ + yorder_, std::move(acc));
}

} // namespace wrcomb

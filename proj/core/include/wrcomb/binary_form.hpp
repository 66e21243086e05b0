#pragma once

#include "wrcomb/rational.hpp"

#include <span>
#include <vector>

namespace wrcomb {

// 2x2 rational matrix acting on the variables of a binary form by linear
// substitution. Construction rejects singular matrices.
struct Mat2 {
    Rational a, b, c, d; // row-major: [[a, b], [c, d]]

    Mat2(Rational a_, Rational b_, Rational c_, Rational d_);

    static Mat2 identity() { return Mat2(1, 0, 0, 1); }

    Rational det() const { return a * d - b * c; }
    bool unimodular() const { return det() == Rational(1); }

    Mat2 operator*(const Mat2& o) const {
        return Mat2(a * o.a + b * o.c, a * o.b + b * o.d,
                    c * o.a + d * o.c, c * o.b + d * o.d);
    }
    bool operator==(const Mat2&) const = default;
};

class BiForm;

// Binary form of fixed order d: sum over j of coeff(j) * x1^(d-j) * x2^j.
// The coefficient vector always has exactly order()+1 entries; the zero form
// of each order keeps its order. Coefficients are the raw monomial ones; the
// binomially weighted convention is available through binomial_coeffs /
// from_binomial at the boundaries.
class BinaryForm {
public:
    explicit BinaryForm(int order);
    BinaryForm(int order, std::vector<Rational> coeffs);

    // c * x1^(order - x2_degree) * x2^(x2_degree)
    static BinaryForm monomial(int order, int x2_degree, Rational c = Rational(1));
    static BinaryForm from_binomial(int order, std::span<const Rational> weighted);

    int order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& coeff(int j) const;
    bool is_zero() const;

    // Coefficients in the binomially weighted convention: coeff(j) / C(d, j).
    std::vector<Rational> binomial_coeffs() const;

    // k1-fold x1-derivative combined with k2-fold x2-derivative. The result
    // order drops to order-k1-k2; differentiating past the order yields the
    // zero form of order 0.
    BinaryForm derivative(int k1, int k2) const;

    // f(a x1 + b x2, c x1 + d x2); a right action on the variable pair.
    BinaryForm substitute(const Mat2& g) const;

    // k-fold polarization with respect to a second variable pair (y1, y2),
    // normalized so that restitution (y := x) gives back the original form.
    BiForm polarize(int k) const;

    bool operator==(const BinaryForm&) const = default;

    BinaryForm& operator+=(const BinaryForm& o);
    BinaryForm& operator-=(const BinaryForm& o);
    friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
    friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator*(const Rational& s, BinaryForm f);
    BinaryForm operator-() const;

private:
    int order_ = 0;
    std::vector<Rational> coeffs_;
};

// Form of separate orders in two variable pairs (x1, x2) and (y1, y2);
// the coefficient of x1^(xorder-i) x2^i y1^(yorder-j) y2^j sits at (i, j).
class BiForm {
public:
    BiForm(int xorder, int yorder);

    int xorder() const { return xorder_; }
    int yorder() const { return yorder_; }

    Rational& at(int i, int j);
    const Rational& at(int i, int j) const;

    // Sets y := x, collapsing to a plain binary form of order xorder+yorder.
    BinaryForm restitution() const;

    bool operator==(const BiForm&) const = default;

private:
    int xorder_ = 0;
    int yorder_ = 0;
    std::vector<Rational> coeffs_;
};

} // namespace wrcomb

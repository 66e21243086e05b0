#include <doctest.h>

#include <vector>

#include <wrcomb/errors.hpp>
#include <wrcomb/matrix.hpp>
#include <wrcomb/subspace.hpp>

using wrcomb::BinaryForm;
using wrcomb::Matrix;
using wrcomb::Rational;
using wrcomb::Subspace;

namespace {

BinaryForm form(int order, std::vector<int> coeffs) {
    std::vector<Rational> c(coeffs.begin(), coeffs.end());
    return BinaryForm(order, std::move(c));
}

}  // namespace

TEST_CASE("two bases of one subspace canonicalize identically") {
    std::vector<BinaryForm> plain{form(2, {1, 0, 0}), form(2, {0, 0, 1})};
    std::vector<BinaryForm> mixed{form(2, {1, 0, 1}), form(2, {1, 0, -1})};
    Subspace a = Subspace::from_forms(plain);
    Subspace b = Subspace::from_forms(mixed);
    CHECK(a == b);
    CHECK(a.dim() == 2);
    CHECK(a.form_order() == 2);

    Matrix expect(2, 3);
    expect.at(0, 0) = Rational(1);
    expect.at(1, 2) = Rational(1);
    CHECK(a.canonical() == expect);
    CHECK(a.basis() == plain);
}

TEST_CASE("different subspaces stay different") {
    std::vector<BinaryForm> u{form(2, {1, 0, 0})};
    std::vector<BinaryForm> v{form(2, {0, 1, 0})};
    CHECK(Subspace::from_forms(u) != Subspace::from_forms(v));
}

TEST_CASE("dependent spanning lists are rejected") {
    BinaryForm f = form(3, {1, 2, 0, -1});
    std::vector<BinaryForm> dep{f, Rational(3) * f};
    CHECK_THROWS_AS(Subspace::from_forms(dep), wrcomb::PreconditionError);

    std::vector<BinaryForm> with_zero{form(2, {0, 0, 0})};
    CHECK_THROWS_AS(Subspace::from_forms(with_zero), wrcomb::PreconditionError);
}

TEST_CASE("from_canonical accepts only reduced echelon matrices") {
    Matrix good(1, 3);
    good.at(0, 0) = Rational(1);
    good.at(0, 2) = Rational(-2);
    Subspace s = Subspace::from_canonical(good, 2);
    CHECK(s.dim() == 1);
    CHECK(s.basis().front() == form(2, {1, 0, -2}));

    Matrix scaled(1, 3);
    scaled.at(0, 0) = Rational(2);  // leading entry not 1
    CHECK_THROWS_AS(Subspace::from_canonical(scaled, 2), wrcomb::PreconditionError);

    Matrix widths(1, 3);
    widths.at(0, 0) = Rational(1);
    CHECK_THROWS_AS(Subspace::from_canonical(widths, 5), wrcomb::PreconditionError);
}

TEST_CASE("canonicalize is the span closure") {
    std::vector<BinaryForm> tilted{form(3, {1, 1, 0, 0}), form(3, {0, 1, 1, 0}),
                                   form(3, {0, 0, 1, 1})};
    Subspace s = wrcomb::canonicalize(tilted);
    CHECK(s.dim() == 3);
    // canonical rows solve for the pivot monomials
    Matrix expect(3, 4);
    expect.at(0, 0) = Rational(1);
    expect.at(0, 3) = Rational(1);
    expect.at(1, 1) = Rational(1);
    expect.at(1, 3) = Rational(-1);
    expect.at(2, 2) = Rational(1);
    expect.at(2, 3) = Rational(1);
    CHECK(s.canonical() == expect);
}

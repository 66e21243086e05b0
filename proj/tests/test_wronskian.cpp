#include <doctest.h>

#include <vector>

#include <wrcomb/binary_form.hpp>
#include <wrcomb/errors.hpp>
#include <wrcomb/transvectant.hpp>
#include <wrcomb/verify.hpp>
#include <wrcomb/wronskian.hpp>

using wrcomb::BinaryForm;
using wrcomb::BorderedWronskian;
using wrcomb::Rational;
using wrcomb::wronskian;

namespace {

BinaryForm form(int order, std::vector<int> coeffs) {
    std::vector<Rational> c(coeffs.begin(), coeffs.end());
    return BinaryForm(order, std::move(c));
}

}  // namespace

TEST_CASE("a single form is its own Wronskian") {
    BinaryForm f = form(3, {1, -4, 0, 2});
    std::vector<BinaryForm> one{f};
    CHECK(wronskian(one) == f);
}

TEST_CASE("hand-computed values") {
    // W(x1^d, x2^d) = x1^(d-1) x2^(d-1)
    for (int d = 1; d <= 4; ++d) {
        std::vector<BinaryForm> pair{BinaryForm::monomial(d, 0), BinaryForm::monomial(d, d)};
        CHECK(wronskian(pair) == BinaryForm::monomial(2 * (d - 1), d - 1));
    }
    // W(x1^2, x2^2, x1 x2) = -1/2
    std::vector<BinaryForm> triple{form(2, {1, 0, 0}), form(2, {0, 0, 1}), form(2, {0, 1, 0})};
    CHECK(wronskian(triple) == BinaryForm(0, {Rational(-1, 2)}));
}

TEST_CASE("two-argument Wronskian is the first transvectant") {
    BinaryForm m = form(3, {1, 2, 0, -1});
    BinaryForm n = form(3, {0, 1, 1, 4});
    std::vector<BinaryForm> pair{m, n};
    CHECK(wronskian(pair) == transvectant(m, n, 1));
}

TEST_CASE("result order is s(n-s+1) and dependence forces zero") {
    BinaryForm f = form(4, {1, 0, 2, 0, 1});
    std::vector<BinaryForm> dep{f, Rational(2) * f};
    BinaryForm w = wronskian(dep);
    CHECK(w.is_zero());
    CHECK(w.order() == 2 * 3);
    CHECK(wrcomb::is_dependent(dep));

    std::vector<BinaryForm> indep{form(4, {1, 0, 0, 0, 0}), form(4, {0, 0, 0, 0, 1})};
    CHECK(!wrcomb::is_dependent(indep));
    CHECK(!wronskian(indep).is_zero());
}

TEST_CASE("swapping two rows flips the sign") {
    BinaryForm a = form(3, {1, 0, 0, 1});
    BinaryForm b = form(3, {0, 1, -1, 0});
    std::vector<BinaryForm> ab{a, b};
    std::vector<BinaryForm> ba{b, a};
    CHECK(wronskian(ab) == -wronskian(ba));
}

TEST_CASE("argument validation") {
    std::vector<BinaryForm> empty;
    CHECK_THROWS_AS(wronskian(empty), wrcomb::PreconditionError);

    std::vector<BinaryForm> mixed{form(2, {1, 0, 0}), form(3, {1, 0, 0, 0})};
    CHECK_THROWS_AS(wronskian(mixed), wrcomb::PreconditionError);

    // more forms than the space has dimensions
    std::vector<BinaryForm> crowd{form(1, {1, 0}), form(1, {0, 1}), form(1, {1, 1})};
    CHECK_THROWS_AS(wronskian(crowd), wrcomb::PreconditionError);
}

TEST_CASE("bordered evaluation agrees with the full determinant") {
    wrcomb::verify::Rng rng(0xB0BACAFEu);
    for (int t = 0; t < 20; ++t) {
        int d = static_cast<int>(rng.uniform(2, 6));
        int s = static_cast<int>(rng.uniform(2, d));  // head is non-empty, s <= n+1
        auto head = wrcomb::verify::random_forms(rng, s - 1, d);
        BorderedWronskian bw(head);
        CHECK(bw.result_order() == s * (d - s + 1));
        BinaryForm f = wrcomb::verify::random_form(rng, d);
        auto full = head;
        full.push_back(f);
        CHECK(bw(f) == wronskian(full));
    }
}

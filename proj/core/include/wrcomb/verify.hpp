#pragma once

#include "wrcomb/binary_form.hpp"
#include "wrcomb/combinant.hpp"
#include "wrcomb/subspace.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wrcomb::verify {

// splitmix64; deterministic and platform independent, which keeps every
// randomized check reproducible from (seed, suite name, case index) alone.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // inclusive on both ends
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool coin() { return (next() & 1) != 0; }

private:
    std::uint64_t state_;
};

struct Options {
    std::uint64_t seed = 1;
    int cases = 25;
    int rmax = 4;
    int dmax = 8;
};

struct SuiteResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    bool ok() const { return failures == 0; }
};

// Samplers; coefficients are small integers in [-9, 9] unless noted.
BinaryForm random_form(Rng& rng, int order);
BinaryForm random_nonzero_form(Rng& rng, int order);
std::vector<BinaryForm> random_forms(Rng& rng, int count, int order);
std::vector<BinaryForm> random_independent_forms(Rng& rng, int r, int d);
Subspace random_subspace(Rng& rng, int r, int d);
Mat2 random_unimodular(Rng& rng);
Matrix random_invertible(Rng& rng, int n);
Rational random_rational(Rng& rng);
Rational random_nonzero_rational(Rng& rng);

// Exact randomized checks of the library's defining identities and
// invariants, one suite per property family. Every listed suite runs `cases`
// independent cases derived deterministically from the seed.
std::vector<std::string> suite_names();
SuiteResult run_suite(std::string_view name, const Options& opt);
std::vector<SuiteResult> run_all(const Options& opt);

// The order-0 identity satisfied by the combinants of a generic pair of
// order-5 forms: C_0 (A_1, A_2)_5 expands over the candidate basis
// {C_2^2, (C_0, C_0)_4, (C_0, C_2)_2} with these fixed coefficients.
const std::vector<Rational>& quintic_identity_coefficients();
SuiteResult quintic_identity_suite(const Options& opt);

} // namespace wrcomb::verify

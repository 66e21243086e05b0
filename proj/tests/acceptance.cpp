// Acceptance gate: eight go/no-go checks, one printed line each. Every
// numeric comparison is exact (rational arithmetic, zero tolerance); the two
// wall-clock bounds are the only inexact thresholds. Seeds are fixed so a
// pass is reproducible bit for bit.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <wrcomb/combinant.hpp>
#include <wrcomb/grassmann.hpp>
#include <wrcomb/matrix.hpp>
#include <wrcomb/subspace.hpp>
#include <wrcomb/transvectant.hpp>
#include <wrcomb/verify.hpp>
#include <wrcomb/wronskian.hpp>

using namespace wrcomb;
namespace verify = wrcomb::verify;

namespace {

int g_failed = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int criterion, bool ok, const std::string& detail) {
    std::printf("criterion %d: %s  %s\n", criterion, ok ? "PASS" : "FAIL", detail.c_str());
    if (!ok) ++g_failed;
}

// 1. Pairs: the extracted components match the closed forms
//    C_0 = (A_1, A_2)_1 and C_2 = (2-d)/(4d-6) (A_1, A_2)_3 for every
//    d = 3..8, 25 random pairs each, in under 5 seconds total.
void criterion_closed_forms() {
    auto t0 = std::chrono::steady_clock::now();
    verify::Rng rng(0xACCE0001u);
    int pairs = 0;
    bool ok = true;
    for (int d = 3; d <= 8 && ok; ++d) {
        for (int i = 0; i < 25 && ok; ++i) {
            auto a = verify::random_forms(rng, 2, d);
            CombinantVector c = wronskian_combinants(a);
            ok = c.at(0) == transvectant(a[0], a[1], 1) &&
                 c.at(2) == Rational(2 - d, 4 * d - 6) * transvectant(a[0], a[1], 3);
            ++pairs;
        }
    }
    double dt = seconds_since(t0);
    bool in_time = dt < 5.0;
    char buf[160];
    std::snprintf(buf, sizeof buf, "pair closed forms, %d extractions exact (%.2fs < 5s)",
                  pairs, dt);
    report(1, ok && in_time, buf);
}

// 2. The defining identity W(A_1..A_r, F) = sum_q (C_q, F)_(r-q) holds
//    exactly for 20 random shapes (2 <= r <= 4, r < d <= 8), 20 random F each.
void criterion_defining_identity() {
    verify::Rng rng(0xACCE0002u);
    int checks = 0;
    bool ok = true;
    for (int t = 0; t < 20 && ok; ++t) {
        int r = static_cast<int>(rng.uniform(2, 4));
        int d = static_cast<int>(rng.uniform(r + 1, 8));
        auto a = verify::random_independent_forms(rng, r, d);
        CombinantVector c = wronskian_combinants(a);
        BorderedWronskian bw(a);
        for (int j = 0; j < 20 && ok; ++j) {
            BinaryForm f = verify::random_form(rng, d);
            ok = bw(f) == psi_apply(c, f);
            ++checks;
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "defining identity residuals all zero (%d checks)", checks);
    report(2, ok, buf);
}

// 3. For the same distribution of shapes, ker(psi_C) is precisely the input
//    subspace: canonical matrices agree entry for entry, the kernel dimension
//    is exactly r and the rank exactly d - r + 1.
void criterion_kernel() {
    verify::Rng rng(0xACCE0003u);
    int checks = 0;
    bool ok = true;
    for (int t = 0; t < 20 && ok; ++t) {
        int r = static_cast<int>(rng.uniform(2, 4));
        int d = static_cast<int>(rng.uniform(r + 1, 8));
        auto a = verify::random_independent_forms(rng, r, d);
        Subspace sub = Subspace::from_forms(a);
        LinearMap psi = psi_matrix(wronskian_combinants(a));
        Matrix null = kernel(psi);
        ok = null == sub.canonical() &&
             null.rows() == static_cast<std::size_t>(r) &&
             psi.mat.rank() == static_cast<std::size_t>(d - r + 1);
        ++checks;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "psi kernel equals the input subspace, rank d-r+1 (%d shapes)", checks);
    report(3, ok, buf);
}

// 4. Recovery inverts the map: for 10 random subspaces and random nonzero
//    rational k, recover_subspace(k * C) returns the subspace and k exactly.
void criterion_recovery() {
    verify::Rng rng(0xACCE0004u);
    int checks = 0;
    bool ok = true;
    for (int t = 0; t < 10 && ok; ++t) {
        int r = static_cast<int>(rng.uniform(2, 4));
        int d = static_cast<int>(rng.uniform(r + 1, 8));
        Subspace sub = verify::random_subspace(rng, r, d);
        Rational k = verify::random_nonzero_rational(rng);
        SubspaceRecovery rec = recover_subspace(wronskian_combinants(sub).scaled(k));
        ok = rec.status == SubspaceRecovery::Status::recovered && *rec.subspace == sub &&
             rec.scale == k;
        ++checks;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf, "subspace and scale recovered exactly (%d cases)", checks);
    report(4, ok, buf);
}

// 5. The Gamma identities: vanishing for p <= r-2, the product identity at
//    p = r-1 and the transvectant identity at p = r, for r = 2, 3, 4,
//    d = r..8 and B of order n in {d, d+2}, 10 cases per shape.
void criterion_gamma() {
    verify::Rng rng(0xACCE0005u);
    int checks = 0;
    bool ok = true;
    for (int r = 2; r <= 4 && ok; ++r) {
        for (int d = r; d <= 8 && ok; ++d) {
            for (int n : {d, d + 2}) {
                for (int i = 0; i < 10 && ok; ++i) {
                    auto a = verify::random_forms(rng, r, d);
                    BinaryForm b = verify::random_form(rng, n);
                    ok = verify_keyprop(b, a).all();
                    ++checks;
                }
                if (!ok) break;
            }
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "Gamma vanishing / product / transvectant identities (%d cases)", checks);
    report(5, ok, buf);
}

// 6. For 10 generic pairs of order-5 forms, C_0 (A_1, A_2)_5 expands over
//    {C_2^2, (C_0, C_0)_4, (C_0, C_2)_2} with coefficients exactly
//    (50, -15, -40). Pairs whose candidates are linearly dependent carry no
//    unique expansion and are redrawn.
void criterion_quintic() {
    verify::Rng rng(0xACCE0006u);
    int checks = 0;
    bool ok = true;
    const std::vector<Rational> expected{Rational(50), Rational(-15), Rational(-40)};
    int draws = 0;
    while (checks < 10 && ok) {
        if (++draws > 1000) {  // degenerate pairs are rare; a run of them is a bug
            ok = false;
            break;
        }
        auto a = verify::random_forms(rng, 2, 5);
        CombinantVector c = wronskian_combinants(a);
        const BinaryForm& c0 = c.at(0);
        const BinaryForm& c2 = c.at(2);
        BinaryForm target = transvectant(a[0], a[1], 5).coeff(0) * c0;
        std::vector<BinaryForm> candidates{c2 * c2, transvectant(c0, c0, 4),
                                           transvectant(c0, c2, 2)};
        BasisExpression expr = express_in_basis(target, candidates);
        if (!expr.candidates_independent) continue;  // degenerate pair, redraw
        ok = expr.in_span && expr.coefficients == expected;
        ++checks;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "order-5 expansion coefficients (50, -15, -40) (%d generic pairs)", checks);
    report(6, ok, buf);
}

// 7. Injectivity sample: for (r, d) = (2, 5) and (3, 6), 50 pairwise distinct
//    subspaces embed to 50 pairwise distinct projective points.
void criterion_injectivity() {
    verify::Rng rng(0xACCE0007u);
    bool ok = true;
    int comparisons = 0;
    for (auto [r, d] : {std::pair{2, 5}, std::pair{3, 6}}) {
        std::vector<Subspace> subs;
        int draws = 0;
        while (subs.size() < 50 && draws < 1000) {
            ++draws;
            Subspace s = verify::random_subspace(rng, r, d);
            bool seen = false;
            for (const Subspace& other : subs) seen = seen || s == other;
            if (!seen) subs.push_back(std::move(s));
        }
        ok = ok && subs.size() == 50;
        std::vector<ProjectivePoint> points;
        points.reserve(subs.size());
        for (const Subspace& s : subs) points.push_back(pluecker_point(s));
        for (std::size_t i = 0; i < points.size() && ok; ++i)
            for (std::size_t j = i + 1; j < points.size() && ok; ++j) {
                ok = !equal_points(points[i], points[j]);
                ++comparisons;
            }
        if (!ok) break;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "distinct subspaces embed to distinct points (%d comparisons)", comparisons);
    report(7, ok, buf);
}

// 8. The full randomized identity battery (every registered suite, 100 cases
//    each) passes with zero failures in under 120 seconds.
void criterion_suites() {
    auto t0 = std::chrono::steady_clock::now();
    verify::Options opt;
    opt.seed = 0xACCE0008u;
    opt.cases = 100;
    auto results = verify::run_all(opt);
    bool ok = true;
    int failures = 0;
    for (const verify::SuiteResult& res : results) {
        failures += res.failures;
        ok = ok && res.ok();
    }
    double dt = seconds_since(t0);
    bool in_time = dt < 120.0;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu suites x 100 cases, %d failures (%.2fs < 120s)",
                  results.size(), failures, dt);
    report(8, ok && in_time, buf);
}

}  // namespace

int main() {
    criterion_closed_forms();
    criterion_defining_identity();
    criterion_kernel();
    criterion_recovery();
    criterion_gamma();
    criterion_quintic();
    criterion_injectivity();
    criterion_suites();

    if (g_failed == 0) {
        std::printf("acceptance: all 8 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failed);
    return 1;
}

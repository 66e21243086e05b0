#include "wrcomb/verify.hpp"

#include "wrcomb/errors.hpp"
#include "wrcomb/form_io.hpp"
#include "wrcomb/grassmann.hpp"
#include "wrcomb/transvectant.hpp"
#include "wrcomb/wronskian.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <utility>

namespace wrcomb::verify {

namespace {

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

Rng case_rng(const Options& opt, std::string_view suite, int index) {
    Rng rng(opt.seed * 0x9e3779b97f4a7c15ULL ^ fnv1a(suite)
            ^ (0x632be59bd9b4e019ULL * static_cast<std::uint64_t>(index + 1)));
    rng.next();
    return rng;
}

void check_options(const Options& opt) {
    if (opt.cases < 1)
        throw PreconditionError("case count must be positive");
    if (opt.rmax < 2)
        throw PreconditionError("rmax must be at least 2");
    if (opt.dmax < opt.rmax + 1)
        throw PreconditionError("dmax must exceed rmax");
}

using CaseFn = std::function<bool(Rng&, const Options&)>;

SuiteResult run_cases(std::string_view name, const Options& opt, const CaseFn& fn) {
    SuiteResult res{std::string(name), opt.cases, 0};
    for (int i = 0; i < opt.cases; ++i) {
        Rng rng = case_rng(opt, name, i);
        if (!fn(rng, opt))
            ++res.failures;
    }
    return res;
}

std::vector<BinaryForm> apply_basis_change(const Matrix& m,
                                           std::span<const BinaryForm> forms) {
    std::vector<BinaryForm> out;
    out.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BinaryForm acc(forms[0].order());
        for (std::size_t j = 0; j < forms.size(); ++j)
            acc += m.at(i, j) * forms[j];
        out.push_back(std::move(acc));
    }
    return out;
}

std::vector<BinaryForm> substitute_all(std::span<const BinaryForm> forms,
                                       const Mat2& g) {
    std::vector<BinaryForm> out;
    out.reserve(forms.size());
    for (const BinaryForm& f : forms)
        out.push_back(f.substitute(g));
    return out;
}

CombinantVector substitute_components(const CombinantVector& e, const Mat2& g) {
    std::map<int, BinaryForm> comps;
    for (const auto& [q, f] : e.components())
        comps.emplace(q, f.substitute(g));
    return CombinantVector(e.r(), e.d(), std::move(comps));
}

// --- suites -----------------------------------------------------------------

bool case_binform_algebra(Rng& rng, const Options&) {
    int d1 = static_cast<int>(rng.uniform(0, 6));
    int d2 = static_cast<int>(rng.uniform(0, 6));
    int d3 = static_cast<int>(rng.uniform(0, 6));
    BinaryForm f = random_form(rng, d1), g = random_form(rng, d2);
    BinaryForm g2 = random_form(rng, d2), h = random_form(rng, d3);

    bool ok = (f * g) == (g * f);
    ok = ok && ((f * g) * h) == (f * (g * h));
    ok = ok && (f * (g + g2)) == (f * g + f * g2);

    int a = static_cast<int>(rng.uniform(0, 3));
    int b = static_cast<int>(rng.uniform(0, 3));
    ok = ok && f.derivative(a, 0).derivative(0, b) == f.derivative(a, b);
    ok = ok && f.derivative(0, b).derivative(a, 0) == f.derivative(a, b);

    Mat2 u = random_unimodular(rng), v = random_unimodular(rng);
    ok = ok && f.substitute(u).substitute(v) == f.substitute(u * v);
    ok = ok && f.substitute(Mat2::identity()) == f;

    int k = static_cast<int>(rng.uniform(0, d1));
    ok = ok && f.polarize(k).restitution() == f;

    ok = ok && BinaryForm::from_binomial(d1, f.binomial_coeffs()) == f;
    return ok;
}

bool case_transvectant_symmetry(Rng& rng, const Options&) {
    int eo = static_cast<int>(rng.uniform(0, 8));
    int fo = static_cast<int>(rng.uniform(0, 8));
    int k = static_cast<int>(rng.uniform(0, 10));
    BinaryForm e = random_form(rng, eo), f = random_form(rng, fo);

    BinaryForm t = transvectant(e, f, k);
    BinaryForm s = transvectant(f, e, k);
    bool ok = (k % 2 == 0) ? t == s : t == -s;
    if (k <= std::min(eo, fo))
        ok = ok && t.order() == eo + fo - 2 * k;
    else
        ok = ok && t.order() == 0 && t.is_zero();
    ok = ok && transvectant(e, f, 0) == e * f;
    if (eo >= 1)
        ok = ok && transvectant(e, e, 1).is_zero();
    return ok;
}

bool case_transvectant_bilinearity(Rng& rng, const Options&) {
    int eo = static_cast<int>(rng.uniform(0, 8));
    int fo = static_cast<int>(rng.uniform(0, 8));
    int k = static_cast<int>(rng.uniform(0, std::min(eo, fo)));
    BinaryForm e1 = random_form(rng, eo), e2 = random_form(rng, eo);
    BinaryForm f = random_form(rng, fo);
    Rational a = random_rational(rng), b = random_rational(rng);

    BinaryForm lhs = transvectant(a * e1 + b * e2, f, k);
    BinaryForm rhs = a * transvectant(e1, f, k) + b * transvectant(e2, f, k);
    bool ok = lhs == rhs;
    lhs = transvectant(f, a * e1 + b * e2, k);
    rhs = a * transvectant(f, e1, k) + b * transvectant(f, e2, k);
    return ok && lhs == rhs;
}

bool case_transvectant_sl2_equivariance(Rng& rng, const Options&) {
    int eo = static_cast<int>(rng.uniform(0, 8));
    int fo = static_cast<int>(rng.uniform(0, 8));
    int k = static_cast<int>(rng.uniform(0, std::min(eo, fo)));
    BinaryForm e = random_form(rng, eo), f = random_form(rng, fo);
    Mat2 g = random_unimodular(rng);
    return transvectant(e.substitute(g), f.substitute(g), k)
           == transvectant(e, f, k).substitute(g);
}

bool case_jacobian_wronskian_agreement(Rng& rng, const Options& opt) {
    int m = static_cast<int>(rng.uniform(1, opt.dmax));
    std::vector<BinaryForm> fs = random_forms(rng, 2, m);
    return transvectant(fs[0], fs[1], 1) == wronskian(fs);
}

bool case_wronskian_alternation(Rng& rng, const Options&) {
    int n = static_cast<int>(rng.uniform(1, 6));
    int s = static_cast<int>(rng.uniform(2, std::min(4L, static_cast<long>(n) + 1)));
    std::vector<BinaryForm> fs = random_forms(rng, s, n);

    BinaryForm w = wronskian(fs);
    std::vector<BinaryForm> swapped = fs;
    std::swap(swapped[0], swapped[static_cast<std::size_t>(s) - 1]);
    bool ok = wronskian(swapped) == ((s > 1) ? -w : w);

    std::vector<BinaryForm> repeated = fs;
    repeated[static_cast<std::size_t>(s) - 1] = repeated[0];
    ok = ok && wronskian(repeated).is_zero();

    BinaryForm extra = random_form(rng, n);
    Rational c = random_rational(rng);
    std::vector<BinaryForm> shifted = fs;
    shifted[0] = fs[0] + c * extra;
    std::vector<BinaryForm> alt = fs;
    alt[0] = extra;
    ok = ok && wronskian(shifted) == w + c * wronskian(alt);
    return ok;
}

bool case_wronskian_sl2_covariance(Rng& rng, const Options& opt) {
    int n = static_cast<int>(rng.uniform(1, opt.dmax));
    int s = static_cast<int>(rng.uniform(1, std::min(4L, static_cast<long>(n) + 1)));
    std::vector<BinaryForm> fs = random_forms(rng, s, n);
    Mat2 g = random_unimodular(rng);
    return wronskian(substitute_all(fs, g)) == wronskian(fs).substitute(g);
}

bool case_dependence_equivalence(Rng& rng, const Options&) {
    int n = static_cast<int>(rng.uniform(1, 6));
    int s = static_cast<int>(rng.uniform(2, std::min(4L, static_cast<long>(n) + 1)));
    std::vector<BinaryForm> fs = random_forms(rng, s, n);
    bool ok = is_dependent(fs) == wronskian(fs).is_zero();

    // engineered dependent family: last form is a combination of the others
    std::vector<BinaryForm> dep = fs;
    BinaryForm combo(n);
    for (std::size_t i = 0; i + 1 < dep.size(); ++i)
        combo += random_rational(rng) * dep[i];
    dep.back() = combo;
    ok = ok && is_dependent(dep) && wronskian(dep).is_zero();
    return ok;
}

bool case_r2_closed_forms(Rng& rng, const Options& opt) {
    int d = static_cast<int>(rng.uniform(3, opt.dmax));
    std::vector<BinaryForm> fs = random_forms(rng, 2, d);
    CombinantVector c = shared_extractor(2, d).extract(fs);

    bool ok = c.at(0) == transvectant(fs[0], fs[1], 1);
    Rational factor = Rational(2 - d) / Rational(4 * d - 6);
    return ok && c.at(2) == factor * transvectant(fs[0], fs[1], 3);
}

bool case_defining_residual(Rng& rng, const Options& opt) {
    int r = static_cast<int>(rng.uniform(1, opt.rmax));
    int d = static_cast<int>(rng.uniform(r, opt.dmax));
    std::vector<BinaryForm> fs = random_forms(rng, r, d);
    CombinantVector c = shared_extractor(r, d).extract(fs);

    bool ok = true;
    for (int probe = 0; probe < 3; ++probe) {
        BinaryForm f = random_form(rng, d);
        std::vector<BinaryForm> all = fs;
        all.push_back(f);
        ok = ok && psi_apply(c, f) == wronskian(all);
    }
    return ok;
}

bool case_extended_extraction_q1(Rng& rng, const Options& opt) {
    int r = static_cast<int>(rng.uniform(2, opt.rmax));
    int d = static_cast<int>(rng.uniform(r + 1, opt.dmax));
    std::vector<BinaryForm> fs = random_forms(rng, r, d);
    // extract() on the extended system throws if the q = 1 slot resolves to
    // anything nonzero
    CombinantVector with_slot = shared_extractor(r, d, true).extract(fs);
    return with_slot == shared_extractor(r, d).extract(fs);
}

bool case_basis_change_det_scaling(Rng& rng, const Options& opt) {
    int r = static_cast<int>(rng.uniform(2, opt.rmax));
    int d = static_cast<int>(rng.uniform(r, opt.dmax));
    std::vector<BinaryForm> fs = random_forms(rng, r, d);
    Matrix m = random_invertible(rng, r);
    CombinantVector lhs = shared_extractor(r, d).extract(apply_basis_change(m, fs));
    CombinantVector rhs = shared_extractor(r, d).extract(fs).scaled(m.determinant());
    return lhs == rhs;
}

bool case_combinant_sl2_equivariance(Rng& rng, const Options& opt) {
    int r = static_cast<int>(rng.uniform(2, opt.rmax));
    int d = static_cast<int>(rng.uniform(r, opt.dmax));
    std::vector<BinaryForm> fs = random_forms(rng, r, d);
    Mat2 g = random_unimodular(rng);
    CombinantVector lhs = shared_extractor(r, d).extract(substitute_all(fs, g));
    CombinantVector rhs = substitute_components(shared_extractor(r, d).extract(fs), g);
    return lhs == rhs;
}

bool case_psi_consistency(Rng& rng, const Options& opt) {
    int r = static_cast<int>(rng.uniform(1, opt.rmax));
    int d = static_cast<int>(rng.uniform(r, opt.dmax));
    std::vector<BinaryForm> fs = random_independent_forms(rng, r, d);
    CombinantVector c = shared_extractor(r, d).extract(fs);

    bool ok = true;
    for (const BinaryForm& a : fs)
        ok = ok && psi_apply(c, a).is_zero();

    LinearMap m = psi_matrix(c);
    BinaryForm probe = random_form(rng, d);
    std::vector<Rational> via_matrix = m.mat.apply(probe.coeffs());
    ok = ok && via_matrix == psi_apply(c, probe).coeffs();
    return ok;
}

bool case_kernel_recovery(Rng& rng, const Options& opt) {
    int r = static_cast<int>(rng.uniform(1, opt.rmax));
    int d = static_cast<int>(rng.uniform(r + 1, opt.dmax));
    Subspace sub = random_subspace(rng, r, d);
    CombinantVector c = wronskian_combinants(sub);

    Matrix null = kernel(psi_matrix(c));
    bool ok = null.rows() == static_cast<std::size_t>(r);
    ok = ok && null == sub.canonical();
    std::size_t rank = static_cast<std::size_t>(d) + 1 - null.rows();
    return ok && rank == static_cast<std::size_t>(d - r) + 1;
}

bool case_scaled_recovery(Rng& rng, const Options& opt) {
    int r = static_cast<int>(rng.uniform(1, opt.rmax));
    int d = static_cast<int>(rng.uniform(r + 1, opt.dmax));
    Subspace sub = random_subspace(rng, r, d);
    Rational k = random_nonzero_rational(rng);

    SubspaceRecovery rec = recover_subspace(wronskian_combinants(sub).scaled(k));
    return rec.status == SubspaceRecovery::Status::recovered
           && rec.subspace == sub && rec.scale == k
           && rec.rank == static_cast<std::size_t>(d - r) + 1;
}

bool case_gamma_identities(Rng& rng, const Options& opt) {
    int r = static_cast<int>(rng.uniform(1, opt.rmax));
    int d = static_cast<int>(rng.uniform(r, opt.dmax));
    int n = rng.coin() ? d : d + 2;
    BinaryForm b = random_form(rng, n);
    std::vector<BinaryForm> fs = random_forms(rng, r, d);
    return verify_keyprop(b, fs).all();
}

bool case_embedding_well_defined(Rng& rng, const Options& opt) {
    int r = static_cast<int>(rng.uniform(2, opt.rmax));
    int d = static_cast<int>(rng.uniform(r + 1, opt.dmax));
    Subspace sub = random_subspace(rng, r, d);

    ProjectivePoint reference = pluecker_point(sub);
    bool ok = true;
    for (int trial = 0; trial < 2; ++trial) {
        Matrix m = random_invertible(rng, r);
        std::vector<BinaryForm> basis = apply_basis_change(m, sub.basis());
        ProjectivePoint p(wronskian_combinants(basis));
        ok = ok && equal_points(p, reference);
    }
    return ok;
}

SuiteResult suite_embedding_injectivity(const Options& opt) {
    SuiteResult res{"embedding_injectivity", 0, 0};
    std::vector<std::pair<int, int>> shapes{{2, std::min(5, opt.dmax)},
                                            {std::min(3, opt.rmax),
                                             std::min(6, opt.dmax)}};
    for (auto [r, d] : shapes) {
        Rng rng = case_rng(opt, res.name, r * 100 + d);
        std::vector<Subspace> subs;
        while (static_cast<int>(subs.size()) < opt.cases) {
            Subspace s = random_subspace(rng, r, d);
            bool fresh = std::none_of(subs.begin(), subs.end(),
                                      [&](const Subspace& t) { return t == s; });
            if (fresh)
                subs.push_back(std::move(s));
        }
        std::vector<ProjectivePoint> points;
        points.reserve(subs.size());
        for (const Subspace& s : subs)
            points.push_back(pluecker_point(s));
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t j = i + 1; j < points.size(); ++j) {
                ++res.cases;
                if (equal_points(points[i], points[j]))
                    ++res.failures;
            }
    }
    return res;
}

bool case_embedding_equivariance(Rng& rng, const Options& opt) {
    int r = static_cast<int>(rng.uniform(2, opt.rmax));
    int d = static_cast<int>(rng.uniform(r + 1, opt.dmax));
    Subspace sub = random_subspace(rng, r, d);
    Mat2 g = random_unimodular(rng);

    Subspace moved = canonicalize(substitute_all(sub.basis(), g));
    ProjectivePoint lhs = pluecker_point(moved);
    ProjectivePoint rhs(substitute_components(wronskian_combinants(sub), g));
    return equal_points(lhs, rhs);
}

bool case_membership_loop(Rng& rng, const Options& opt) {
    int r = static_cast<int>(rng.uniform(1, opt.rmax));
    int d = static_cast<int>(rng.uniform(r + 1, opt.dmax));
    Subspace sub = random_subspace(rng, r, d);
    Rational k = random_nonzero_rational(rng);
    CombinantVector scaled = wronskian_combinants(sub).scaled(k);

    MembershipVerdict v = image_membership(scaled);
    bool ok = v.in_image && v.rank == static_cast<std::size_t>(d - r) + 1
              && v.recovery.has_value()
              && v.recovery->status == SubspaceRecovery::Status::recovered
              && v.recovery->subspace == sub && v.recovery->scale == k;

    // A perturbed vector is almost never a combinant vector; whatever the
    // verdict, it must be internally coherent.
    CombinantVector probe = scaled;
    {
        std::map<int, BinaryForm> comps = probe.components();
        BinaryForm& c0 = comps.at(0);
        c0 += random_nonzero_form(rng, c0.order());
        probe = CombinantVector(probe.r(), probe.d(), std::move(comps));
    }
    if (probe.is_zero())
        return ok;
    MembershipVerdict w = image_membership(probe);
    if (w.in_image)
        ok = ok && w.recovery.has_value()
             && w.recovery->status == SubspaceRecovery::Status::recovered;
    else
        ok = ok && w.rank > w.rank_bound;
    return ok;
}

bool case_io_roundtrip(Rng& rng, const Options& opt) {
    int d = static_cast<int>(rng.uniform(0, opt.dmax));
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j)
        coeffs.push_back(random_rational(rng));
    BinaryForm f(d, std::move(coeffs));

    bool binomial = rng.coin();
    std::string text = io::form_json(f, binomial);
    bool ok = io::parse_form(text, binomial) == f;
    ok = ok && io::form_json(f, binomial) == text;

    int r = static_cast<int>(rng.uniform(1, std::min(3, opt.rmax)));
    int dd = static_cast<int>(rng.uniform(r, std::min(6, opt.dmax)));
    std::map<int, BinaryForm> comps;
    for (int q : CombinantVector::slots(r, dd))
        comps.emplace(q, random_form(rng, CombinantVector::component_order(r, dd, q)));
    CombinantVector e(r, dd, std::move(comps));
    std::string etext = io::combinants_json(e, binomial);
    return ok && io::parse_combinants(etext, binomial) == e;
}

bool case_quintic_identity(Rng& rng, const Options&) {
    const std::vector<Rational>& k = quintic_identity_coefficients();
    for (;;) {
        std::vector<BinaryForm> fs = random_independent_forms(rng, 2, 5);
        CombinantVector c = shared_extractor(2, 5).extract(fs);
        const BinaryForm& c0 = c.at(0);
        const BinaryForm& c2 = c.at(2);

        BinaryForm target = c0 * transvectant(fs[0], fs[1], 5);
        std::vector<BinaryForm> candidates{c2 * c2, transvectant(c0, c0, 4),
                                           transvectant(c0, c2, 2)};
        // the identity itself holds for every pair
        if (!(target == k[0] * candidates[0] + k[1] * candidates[1]
                            + k[2] * candidates[2]))
            return false;
        BasisExpression expr = express_in_basis(target, candidates);
        if (!expr.in_span)
            return false;
        // the coefficients are pinned down only when the candidates are a
        // basis; the rare degenerate pair is redrawn
        if (!expr.candidates_independent)
            continue;
        return expr.coefficients == k;
    }
}

struct SuiteEntry {
    const char* name;
    bool (*fn)(Rng&, const Options&);
};

constexpr SuiteEntry kSuites[] = {
    {"binform_algebra", case_binform_algebra},
    {"transvectant_symmetry", case_transvectant_symmetry},
    {"transvectant_bilinearity", case_transvectant_bilinearity},
    {"transvectant_sl2_equivariance", case_transvectant_sl2_equivariance},
    {"jacobian_wronskian_agreement", case_jacobian_wronskian_agreement},
    {"wronskian_alternation", case_wronskian_alternation},
    {"wronskian_sl2_covariance", case_wronskian_sl2_covariance},
    {"dependence_equivalence", case_dependence_equivalence},
    {"r2_closed_forms", case_r2_closed_forms},
    {"defining_residual", case_defining_residual},
    {"extended_extraction_q1", case_extended_extraction_q1},
    {"basis_change_det_scaling", case_basis_change_det_scaling},
    {"combinant_sl2_equivariance", case_combinant_sl2_equivariance},
    {"psi_consistency", case_psi_consistency},
    {"kernel_recovery", case_kernel_recovery},
    {"scaled_recovery", case_scaled_recovery},
    {"gamma_identities", case_gamma_identities},
    {"embedding_well_defined", case_embedding_well_defined},
    {"embedding_equivariance", case_embedding_equivariance},
    {"membership_loop", case_membership_loop},
    {"io_roundtrip", case_io_roundtrip},
    {"quintic_identity", case_quintic_identity},
};

} // namespace

BinaryForm random_form(Rng& rng, int order) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1);
    for (Rational& c : coeffs)
        c = Rational(rng.uniform(-9, 9));
    return BinaryForm(order, std::move(coeffs));
}

BinaryForm random_nonzero_form(Rng& rng, int order) {
    for (;;) {
        BinaryForm f = random_form(rng, order);
        if (!f.is_zero())
            return f;
    }
}

std::vector<BinaryForm> random_forms(Rng& rng, int count, int order) {
    std::vector<BinaryForm> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        out.push_back(random_form(rng, order));
    return out;
}

std::vector<BinaryForm> random_independent_forms(Rng& rng, int r, int d) {
    if (r > d + 1)
        throw PreconditionError("cannot pick more independent forms than the dimension");
    for (;;) {
        std::vector<BinaryForm> fs = random_forms(rng, r, d);
        if (!is_dependent(fs))
            return fs;
    }
}

Subspace random_subspace(Rng& rng, int r, int d) {
    return canonicalize(random_independent_forms(rng, r, d));
}

Mat2 random_unimodular(Rng& rng) {
    Mat2 g = Mat2::identity();
    int shears = static_cast<int>(rng.uniform(2, 4));
    for (int i = 0; i < shears; ++i) {
        Rational t(rng.uniform(-3, 3));
        Mat2 shear = (i % 2 == 0) ? Mat2(1, t, 0, 1) : Mat2(1, 0, t, 1);
        g = g * shear;
    }
    return g;
}

Matrix random_invertible(Rng& rng, int n) {
    for (;;) {
        Matrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                m.at(i, j) = Rational(rng.uniform(-5, 5));
        if (!m.determinant().is_zero())
            return m;
    }
}

Rational random_rational(Rng& rng) {
    return Rational(rng.uniform(-9, 9), rng.uniform(1, 9));
}

Rational random_nonzero_rational(Rng& rng) {
    for (;;) {
        Rational k = random_rational(rng);
        if (!k.is_zero())
            return k;
    }
}

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const SuiteEntry& s : kSuites)
        out.emplace_back(s.name);
    out.emplace_back("embedding_injectivity");
    return out;
}

SuiteResult run_suite(std::string_view name, const Options& opt) {
    check_options(opt);
    if (name == "embedding_injectivity")
        return suite_embedding_injectivity(opt);
    for (const SuiteEntry& s : kSuites)
        if (name == s.name)
            return run_cases(s.name, opt, s.fn);
    throw PreconditionError("unknown suite '" + std::string(name) + "'");
}

std::vector<SuiteResult> run_all(const Options& opt) {
    check_options(opt);
    std::vector<SuiteResult> out;
    for (const SuiteEntry& s : kSuites)
        out.push_back(run_cases(s.name, opt, s.fn));
    out.push_back(suite_embedding_injectivity(opt));
    return out;
}

const std::vector<Rational>& quintic_identity_coefficients() {
    static const std::vector<Rational> k{Rational(50), Rational(-15), Rational(-40)};
    return k;
}

SuiteResult quintic_identity_suite(const Options& opt) {
    if (opt.cases < 1)
        throw PreconditionError("case count must be positive");
    return run_cases("quintic_identity", opt, case_quintic_identity);
}

} // namespace wrcomb::verify

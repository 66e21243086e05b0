#include "wrcomb/combinant.hpp"

#include "wrcomb/errors.hpp"
#include "wrcomb/transvectant.hpp"
#include "wrcomb/wronskian.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

namespace wrcomb {

namespace {

void check_parameters(int r, int d) {
    if (r < 1)
        throw PreconditionError("at least one form is required");
    if (r > d)
        throw PreconditionError("combinants need r <= d, got r = "
                                + std::to_string(r) + ", d = " + std::to_string(d));
}

int common_order_checked(std::span<const BinaryForm> forms, const char* what) {
    if (forms.empty())
        throw PreconditionError(std::string(what) + " requires at least one form");
    int d = forms[0].order();
    for (const BinaryForm& f : forms)
        if (f.order() != d)
            throw PreconditionError(std::string(what) + " requires equal orders");
    return d;
}

} // namespace

CombinantVector::CombinantVector(int r, int d, std::map<int, BinaryForm> components)
    : r_(r), d_(d), components_(std::move(components)) {
    check_parameters(r, d);
    std::vector<int> expected = slots(r, d);
    if (components_.size() != expected.size())
        throw PreconditionError("combinant vector has wrong number of components");
    auto it = components_.begin();
    for (int q : expected) {
        if (it->first != q)
            throw PreconditionError("unexpected combinant component q = "
                                    + std::to_string(it->first));
        if (it->second.order() != component_order(r, d, q))
            throw PreconditionError("component q = " + std::to_string(q)
                                    + " has order " + std::to_string(it->second.order())
                                    + ", expected "
                                    + std::to_string(component_order(r, d, q)));
        ++it;
    }
}

CombinantVector CombinantVector::zero(int r, int d) {
    check_parameters(r, d);
    std::map<int, BinaryForm> comps;
    for (int q : slots(r, d))
        comps.emplace(q, BinaryForm(component_order(r, d, q)));
    return CombinantVector(r, d, std::move(comps));
}

std::vector<int> CombinantVector::slots(int r, int d) {
    check_parameters(r, d);
    std::vector<int> out{0};
    for (int q = 2; q <= r; ++q)
        if (component_order(r, d, q) >= 0)
            out.push_back(q);
    return out;
}

const BinaryForm& CombinantVector::at(int q) const {
    auto it = components_.find(q);
    if (it == components_.end())
        throw PreconditionError("no combinant component q = " + std::to_string(q));
    return it->second;
}

bool CombinantVector::is_zero() const {
    for (const auto& [q, f] : components_)
        if (!f.is_zero())
            return false;
    return true;
}

CombinantVector CombinantVector::scaled(const Rational& k) const {
    std::map<int, BinaryForm> comps;
    for (const auto& [q, f] : components_)
        comps.emplace(q, k * f);
    return CombinantVector(r_, d_, std::move(comps));
}

CombinantExtractor::CombinantExtractor(int r, int d, bool include_q1_slot)
    : r_(r), d_(d), include_q1_(include_q1_slot) {
    check_parameters(r, d);
    if (include_q1_ && r >= d)
        throw PreconditionError("the q = 1 check needs r < d");

    // Slots the system determines: transvecting a form of order m against an
    // order-d form with index k = r - q is the zero map unless k <= m.
    for (int q : CombinantVector::slots(r, d))
        if (r - q <= CombinantVector::component_order(r, d, q))
            solved_.push_back(q);
    if (include_q1_)
        solved_.insert(std::upper_bound(solved_.begin(), solved_.end(), 1), 1);

    int big_n = (r + 1) * (d - r); // order of W(A_1, ..., A_r, F)
    std::size_t rows = static_cast<std::size_t>(d + 1)
                       * static_cast<std::size_t>(big_n + 1);
    cols_ = 0;
    for (int q : solved_)
        cols_ += static_cast<std::size_t>(CombinantVector::component_order(r, d, q)) + 1;

    system_ = Matrix(rows, cols_);
    std::size_t col = 0;
    for (int q : solved_) {
        int m = CombinantVector::component_order(r, d, q);
        int k = r - q;
        for (int t = 0; t <= m; ++t, ++col) {
            BinaryForm unit = BinaryForm::monomial(m, t);
            for (int j = 0; j <= d; ++j) {
                BinaryForm img = transvectant(unit, BinaryForm::monomial(d, j), k);
                for (int u = 0; u <= big_n; ++u)
                    system_.at(static_cast<std::size_t>(j) * (big_n + 1)
                                   + static_cast<std::size_t>(u),
                               col) = img.coeff(u);
            }
        }
    }

    // Pick an independent row per unknown by incremental elimination; the
    // rows skipped here still participate in the residual check at extract
    // time, so nothing is lost.
    std::vector<std::vector<Rational>> reduced;
    std::vector<std::size_t> lead;
    for (std::size_t i = 0; i < rows && pivot_rows_.size() < cols_; ++i) {
        std::vector<Rational> v(cols_);
        for (std::size_t c = 0; c < cols_; ++c)
            v[c] = system_.at(i, c);
        for (std::size_t k2 = 0; k2 < reduced.size(); ++k2) {
            if (v[lead[k2]].is_zero())
                continue;
            Rational f = v[lead[k2]];
            for (std::size_t c = 0; c < cols_; ++c)
                v[c] -= f * reduced[k2][c];
        }
        std::size_t first = cols_;
        for (std::size_t c = 0; c < cols_; ++c)
            if (!v[c].is_zero()) {
                first = c;
                break;
            }
        if (first == cols_)
            continue;
        Rational inv = Rational(1) / v[first];
        for (std::size_t c = first; c < cols_; ++c)
            v[c] *= inv;
        pivot_rows_.push_back(i);
        reduced.push_back(std::move(v));
        lead.push_back(first);
    }
    if (pivot_rows_.size() != cols_)
        throw std::logic_error("combinant system is rank deficient");

    Matrix block(cols_, cols_);
    for (std::size_t i = 0; i < cols_; ++i)
        for (std::size_t c = 0; c < cols_; ++c)
            block.at(i, c) = system_.at(pivot_rows_[i], c);
    solver_ = block.inverse();
}

CombinantVector CombinantExtractor::extract(std::span<const BinaryForm> forms) const {
    if (static_cast<int>(forms.size()) != r_)
        throw PreconditionError("expected " + std::to_string(r_) + " forms, got "
                                + std::to_string(forms.size()));
    for (const BinaryForm& f : forms)
        if (f.order() != d_)
            throw PreconditionError("expected forms of order " + std::to_string(d_));

    int big_n = (r_ + 1) * (d_ - r_);
    BorderedWronskian bw(forms);
    std::vector<Rational> rhs(system_.rows());
    for (int j = 0; j <= d_; ++j) {
        BinaryForm w = bw(BinaryForm::monomial(d_, j));
        for (int u = 0; u <= big_n; ++u)
            rhs[static_cast<std::size_t>(j) * (big_n + 1)
                + static_cast<std::size_t>(u)] = w.coeff(u);
    }

    std::vector<Rational> picked(cols_);
    for (std::size_t i = 0; i < cols_; ++i)
        picked[i] = rhs[pivot_rows_[i]];
    std::vector<Rational> x = solver_.apply(picked);

    // Every equation of the defining identity must hold, not just the solved
    // subset; this is what makes the extraction trustworthy.
    if (system_.apply(x) != rhs)
        throw std::logic_error("defining system has no exact solution");

    std::map<int, BinaryForm> comps;
    std::size_t off = 0;
    for (int q : solved_) {
        int m = CombinantVector::component_order(r_, d_, q);
        std::vector<Rational> coeffs(x.begin() + static_cast<std::ptrdiff_t>(off),
                                     x.begin() + static_cast<std::ptrdiff_t>(off + m + 1));
        off += static_cast<std::size_t>(m) + 1;
        BinaryForm g(m, std::move(coeffs));
        if (q == 1) {
            if (!g.is_zero())
                throw std::logic_error("q = 1 slot resolved to a nonzero form");
            continue;
        }
        comps.emplace(q, std::move(g));
    }
    // Slots the system cannot see (only in the degenerate case d = r) are zero.
    for (int q : CombinantVector::slots(r_, d_))
        if (!comps.contains(q))
            comps.emplace(q, BinaryForm(CombinantVector::component_order(r_, d_, q)));
    return CombinantVector(r_, d_, std::move(comps));
}

const CombinantExtractor& shared_extractor(int r, int d, bool include_q1_slot) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, bool>, CombinantExtractor> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(r, d, include_q1_slot);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.try_emplace(key, r, d, include_q1_slot).first;
    return it->second;
}

CombinantVector wronskian_combinants(std::span<const BinaryForm> forms) {
    int d = common_order_checked(forms, "combinant extraction");
    return shared_extractor(static_cast<int>(forms.size()), d).extract(forms);
}

CombinantVector wronskian_combinants(const Subspace& subspace) {
    return shared_extractor(subspace.dim(), subspace.form_order())
        .extract(subspace.basis());
}

BinaryForm psi_apply(const CombinantVector& e, const BinaryForm& f) {
    if (f.order() != e.d())
        throw PreconditionError("psi argument must have order " + std::to_string(e.d()));
    BinaryForm acc((e.r() + 1) * (e.d() - e.r()));
    for (const auto& [q, comp] : e.components()) {
        int k = e.r() - q;
        if (k > comp.order() || k > e.d())
            continue; // identically zero transvectant
        acc += transvectant(comp, f, k);
    }
    return acc;
}

LinearMap psi_matrix(const CombinantVector& e) {
    int big_n = (e.r() + 1) * (e.d() - e.r());
    LinearMap out{e.d(), big_n, Matrix(static_cast<std::size_t>(big_n) + 1,
                                       static_cast<std::size_t>(e.d()) + 1)};
    for (int j = 0; j <= e.d(); ++j) {
        BinaryForm col = psi_apply(e, BinaryForm::monomial(e.d(), j));
        for (int u = 0; u <= big_n; ++u)
            out.mat.at(static_cast<std::size_t>(u), static_cast<std::size_t>(j)) =
                col.coeff(u);
    }
    return out;
}

Matrix kernel(const LinearMap& m) {
    return m.mat.nullspace();
}

BinaryForm gamma(const BinaryForm& b, std::span<const BinaryForm> forms, int p) {
    int d = common_order_checked(forms, "gamma");
    int r = static_cast<int>(forms.size());
    int n = b.order();
    if (p < 0 || p > std::min(d, n))
        throw PreconditionError("gamma index must satisfy 0 <= p <= min(orders)");

    int wdel_order = (r - 1) * (d - r + 2);
    BinaryForm acc(n + d - 2 * p + wdel_order);
    std::vector<BinaryForm> deleted;
    deleted.reserve(forms.size() - 1);
    for (int i = 0; i < r; ++i) {
        deleted.clear();
        for (int j = 0; j < r; ++j)
            if (j != i)
                deleted.push_back(forms[static_cast<std::size_t>(j)]);
        BinaryForm w = deleted.empty() ? BinaryForm(0, {Rational(1)})
                                       : wronskian(deleted);
        BinaryForm term = transvectant(b, forms[static_cast<std::size_t>(i)], p) * w;
        if (i % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

KeypropReport verify_keyprop(const BinaryForm& b, std::span<const BinaryForm> forms) {
    int d = common_order_checked(forms, "keyprop");
    int r = static_cast<int>(forms.size());
    if (r > std::min(d, b.order()))
        throw PreconditionError("keyprop needs r <= min(order of B, order of the A_i)");

    KeypropReport rep;
    rep.vanishing_below = true;
    for (int p = 0; p <= r - 2; ++p)
        if (!gamma(b, forms, p).is_zero())
            rep.vanishing_below = false;

    BinaryForm w = wronskian(forms);
    Rational sign = (r - 1) % 2 == 0 ? Rational(1) : Rational(-1);
    rep.product_identity = gamma(b, forms, r - 1) == sign * (b * w);
    rep.transvectant_identity =
        gamma(b, forms, r) == (sign * Rational(r)) * transvectant(b, w, 1);
    return rep;
}

SubspaceRecovery recover_subspace(const CombinantVector& e) {
    if (e.is_zero())
        throw PreconditionError("combinant vector is identically zero");

    Matrix null = kernel(psi_matrix(e));
    SubspaceRecovery out;
    out.kernel_dim = null.rows();
    out.rank = static_cast<std::size_t>(e.d()) + 1 - null.rows();
    if (null.rows() != static_cast<std::size_t>(e.r())) {
        out.status = SubspaceRecovery::Status::not_in_image;
        out.reason = "kernel of psi has dimension " + std::to_string(null.rows())
                     + ", expected " + std::to_string(e.r());
        return out;
    }

    Subspace sub = Subspace::from_canonical(null, e.d());
    CombinantVector c = wronskian_combinants(sub);

    // The q = 0 component is the Wronskian of the kernel basis, nonzero by
    // independence; the scale can be read off its first nonzero coefficient.
    const BinaryForm& c0 = c.at(0);
    const BinaryForm& e0 = e.at(0);
    Rational k;
    for (int j = 0; j <= c0.order(); ++j)
        if (!c0.coeff(j).is_zero()) {
            k = e0.coeff(j) / c0.coeff(j);
            break;
        }

    if (k.is_zero() || !(e == c.scaled(k))) {
        if (e.r() < e.d())
            // For r < d a combinant vector whose kernel has dimension exactly
            // r is necessarily a multiple of that kernel's combinants.
            throw std::logic_error("kernel of expected dimension without proportional components");
        out.status = SubspaceRecovery::Status::not_in_image;
        out.reason = "components are not a common multiple of the kernel's "
                     "combinants (degenerate case r = d)";
        return out;
    }

    out.status = SubspaceRecovery::Status::recovered;
    out.subspace = std::move(sub);
    out.scale = std::move(k);
    return out;
}

BasisExpression express_in_basis(const BinaryForm& target,
                                 std::span<const BinaryForm> candidates) {
    int m = common_order_checked(candidates, "basis expression");
    if (target.order() != m)
        throw PreconditionError("target order does not match the candidates");

    Matrix a(static_cast<std::size_t>(m) + 1, candidates.size());
    for (std::size_t c = 0; c < candidates.size(); ++c)
        for (int j = 0; j <= m; ++j)
            a.at(static_cast<std::size_t>(j), c) = candidates[c].coeff(j);

    Matrix::Solution sol = a.solve(target.coeffs());
    BasisExpression out;
    out.in_span = sol.consistent;
    out.candidates_independent = sol.rank == candidates.size();
    if (sol.consistent)
        out.coefficients = std::move(sol.values);
    return out;
}

} // namespace wrcomb

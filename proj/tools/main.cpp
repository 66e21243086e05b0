// Command line front end. Every subcommand prints one JSON document to
// stdout; diagnostics go to stderr as a single JSON line. Exit codes: 0 ok,
// 2 malformed input, 3 violated precondition, 4 failed verification,
// 1 internal fault.

#include "wrcomb/combinant.hpp"
#include "wrcomb/errors.hpp"
#include "wrcomb/form_io.hpp"
#include "wrcomb/grassmann.hpp"
#include "wrcomb/subspace.hpp"
#include "wrcomb/transvectant.hpp"
#include "wrcomb/verify.hpp"
#include "wrcomb/wronskian.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::json;
using namespace wrcomb;

void emit(const json& doc) {
    std::cout << doc.dump(2) << "\n";
}

void emit_error(const std::string& code, const std::string& message) {
    json err{{"error", {{"code", code}, {"message", message}}}};
    std::cerr << err.dump() << "\n";
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json form_doc(const BinaryForm& f, bool binomial) {
    return json{{"order", f.order()}, {"coeffs", io::coeff_strings(f, binomial)}};
}

std::vector<BinaryForm> parse_forms(const std::vector<std::string>& texts,
                                    bool binomial) {
    std::vector<BinaryForm> out;
    out.reserve(texts.size());
    for (const std::string& t : texts)
        out.push_back(io::parse_form(t, binomial));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for Wronskian combinants of binary forms"};
    app.require_subcommand(1);

    bool binomial = false;
    app.add_flag("--binomial", binomial,
                 "coefficient lists use the binomially weighted convention");

    int exit_code = 0;

    // transvect
    std::string tv_e, tv_f;
    int tv_k = 0;
    CLI::App* transvect = app.add_subcommand(
        "transvect", "k-th transvectant of two forms");
    transvect->fallthrough();
    transvect->add_option("E", tv_e, "first form")->required();
    transvect->add_option("F", tv_f, "second form")->required();
    transvect->add_option("k", tv_k, "transvectant index")->required();
    transvect->callback([&] {
        BinaryForm result = transvectant(io::parse_form(tv_e, binomial),
                                         io::parse_form(tv_f, binomial), tv_k);
        emit(form_doc(result, binomial));
    });

    // wronskian
    std::vector<std::string> wr_forms;
    CLI::App* wronsk = app.add_subcommand(
        "wronskian", "Wronskian of forms of one common order");
    wronsk->fallthrough();
    wronsk->add_option("forms", wr_forms, "forms F1 F2 ...")->required()->expected(-1);
    wronsk->callback([&] {
        emit(form_doc(wronskian(parse_forms(wr_forms, binomial)), binomial));
    });

    // combinants
    std::vector<std::string> cb_forms;
    CLI::App* comb = app.add_subcommand(
        "combinants", "Wronskian combinants C_q of r forms of order d");
    comb->fallthrough();
    comb->add_option("forms", cb_forms, "forms A1 ... Ar")->required()->expected(-1);
    comb->callback([&] {
        std::vector<BinaryForm> forms = parse_forms(cb_forms, binomial);
        CombinantVector c = wronskian_combinants(forms);
        json comps = json::object();
        for (const auto& [q, f] : c.components())
            comps[std::to_string(q)] = form_doc(f, binomial);
        emit(json{{"r", c.r()}, {"d", c.d()}, {"components", std::move(comps)}});
    });

    // psi-kernel
    std::string pk_file;
    CLI::App* psik = app.add_subcommand(
        "psi-kernel", "kernel and rank of psi_E for a combinant vector file");
    psik->fallthrough();
    psik->add_option("file", pk_file, "combinant vector JSON ('-' for stdin)")
        ->required();
    psik->callback([&] {
        CombinantVector e = io::parse_combinants(read_input(pk_file), binomial);
        if (e.is_zero())
            throw PreconditionError("combinant vector is identically zero");
        LinearMap m = psi_matrix(e);
        Matrix null = kernel(m);
        std::size_t rank = m.mat.cols() - null.rows();
        std::size_t bound = static_cast<std::size_t>(e.d() - e.r()) + 1;
        json basis = json::array();
        for (std::size_t i = 0; i < null.rows(); ++i) {
            std::vector<Rational> coeffs(null.cols());
            for (std::size_t c = 0; c < null.cols(); ++c)
                coeffs[c] = null.at(i, c);
            basis.push_back(form_doc(BinaryForm(e.d(), std::move(coeffs)), binomial));
        }
        emit(json{{"r", e.r()},
                  {"d", e.d()},
                  {"rank", rank},
                  {"rank_bound", bound},
                  {"kernel_dimension", null.rows()},
                  {"in_image", rank <= bound},
                  {"kernel_basis", std::move(basis)}});
    });

    // recover
    std::string rc_file;
    CLI::App* recover = app.add_subcommand(
        "recover", "subspace and scale behind a combinant vector file");
    recover->fallthrough();
    recover->add_option("file", rc_file, "combinant vector JSON ('-' for stdin)")
        ->required();
    recover->callback([&] {
        CombinantVector e = io::parse_combinants(read_input(rc_file), binomial);
        SubspaceRecovery rec = recover_subspace(e);
        if (rec.status == SubspaceRecovery::Status::recovered) {
            json basis = json::array();
            for (const BinaryForm& f : rec.subspace->basis())
                basis.push_back(form_doc(f, binomial));
            emit(json{{"recovered", true},
                      {"rank", rec.rank},
                      {"kernel_dimension", rec.kernel_dim},
                      {"scale", rec.scale.str()},
                      {"subspace", {{"r", rec.subspace->dim()},
                                    {"d", rec.subspace->form_order()},
                                    {"basis", std::move(basis)}}}});
        } else {
            emit(json{{"recovered", false},
                      {"rank", rec.rank},
                      {"kernel_dimension", rec.kernel_dim},
                      {"reason", rec.reason}});
            emit_error("not_in_image", rec.reason);
            exit_code = 4;
        }
    });

    // gamma
    std::string gm_b;
    int gm_p = 0;
    std::vector<std::string> gm_forms;
    CLI::App* gam = app.add_subcommand(
        "gamma", "alternating sum Gamma_p(B; A_1..A_r) of transvectant-Wronskian products");
    gam->fallthrough();
    gam->add_option("B", gm_b, "form B")->required();
    gam->add_option("p", gm_p, "transvectant index")->required();
    gam->add_option("forms", gm_forms, "forms A1 ... Ar")->required()->expected(-1);
    gam->callback([&] {
        BinaryForm b = io::parse_form(gm_b, binomial);
        emit(form_doc(gamma(b, parse_forms(gm_forms, binomial), gm_p), binomial));
    });

    // verify-keyprop
    std::string kp_b;
    std::vector<std::string> kp_forms;
    CLI::App* keyp = app.add_subcommand(
        "verify-keyprop", "check the three Gamma_p identities for given forms");
    keyp->fallthrough();
    keyp->add_option("B", kp_b, "form B")->required();
    keyp->add_option("forms", kp_forms, "forms A1 ... Ar")->required()->expected(-1);
    keyp->callback([&] {
        BinaryForm b = io::parse_form(kp_b, binomial);
        std::vector<BinaryForm> forms = parse_forms(kp_forms, binomial);
        KeypropReport rep = verify_keyprop(b, forms);
        emit(json{{"r", forms.size()},
                  {"identities",
                   {{"vanishing_below_r_minus_1", rep.vanishing_below},
                    {"product_at_r_minus_1", rep.product_identity},
                    {"transvectant_at_r", rep.transvectant_identity}}},
                  {"all", rep.all()}});
        if (!rep.all()) {
            emit_error("verification", "a Gamma_p identity failed");
            exit_code = 4;
        }
    });

    // embed
    std::vector<std::string> em_forms;
    CLI::App* embed = app.add_subcommand(
        "embed", "normalized projective point of the subspace spanned by the forms");
    embed->fallthrough();
    embed->add_option("forms", em_forms, "independent forms A1 ... Ar")
        ->required()
        ->expected(-1);
    embed->callback([&] {
        Subspace sub = canonicalize(parse_forms(em_forms, binomial));
        ProjectivePoint p = pluecker_point(sub);
        json orders = json::object();
        for (int q : p.slot_qs())
            orders[std::to_string(q)] =
                CombinantVector::component_order(p.r(), p.d(), q);
        json coords = json::array();
        for (const Rational& c : p.coordinates())
            coords.push_back(c.str());
        emit(json{{"r", p.r()},
                  {"d", p.d()},
                  {"component_orders", std::move(orders)},
                  {"coordinates", std::move(coords)}});
    });

    // verify-suite
    verify::Options vs_opt;
    CLI::App* suite = app.add_subcommand(
        "verify-suite", "run the randomized exact invariant suites");
    suite->fallthrough();
    suite->add_option("--seed", vs_opt.seed, "random seed")->capture_default_str();
    suite->add_option("--cases", vs_opt.cases, "cases per suite")->capture_default_str();
    suite->add_option("--rmax", vs_opt.rmax, "largest r drawn")->capture_default_str();
    suite->add_option("--dmax", vs_opt.dmax, "largest order drawn")->capture_default_str();
    suite->callback([&] {
        std::vector<verify::SuiteResult> results = verify::run_all(vs_opt);
        json suites = json::array();
        bool all_ok = true;
        for (const verify::SuiteResult& r : results) {
            suites.push_back(json{{"name", r.name},
                                  {"cases", r.cases},
                                  {"failures", r.failures},
                                  {"ok", r.ok()}});
            all_ok = all_ok && r.ok();
        }
        emit(json{{"seed", vs_opt.seed},
                  {"cases", vs_opt.cases},
                  {"rmax", vs_opt.rmax},
                  {"dmax", vs_opt.dmax},
                  {"suites", std::move(suites)},
                  {"all_ok", all_ok}});
        if (!all_ok) {
            emit_error("verification", "at least one suite reported failures");
            exit_code = 4;
        }
    });

    // quintic-identity
    std::uint64_t qi_seed = 1;
    int qi_cases = 10;
    CLI::App* quintic = app.add_subcommand(
        "quintic-identity", "expand C_0 (A_1,A_2)_5 over the degree-two basis "
                            "for random order-5 pairs");
    quintic->fallthrough();
    quintic->add_option("--seed", qi_seed, "random seed")->capture_default_str();
    quintic->add_option("--cases", qi_cases, "number of random pairs")
        ->capture_default_str();
    quintic->callback([&] {
        verify::Options opt;
        opt.seed = qi_seed;
        opt.cases = qi_cases;
        verify::SuiteResult res = verify::quintic_identity_suite(opt);
        json expected = json::array();
        for (const Rational& c : verify::quintic_identity_coefficients())
            expected.push_back(c.str());
        emit(json{{"seed", qi_seed},
                  {"cases", res.cases},
                  {"failures", res.failures},
                  {"expected_coefficients", std::move(expected)},
                  {"ok", res.ok()}});
        if (!res.ok()) {
            emit_error("verification", "the expansion coefficients did not match");
            exit_code = 4;
        }
    });

    // CLI11 tears an argument shaped like [a,b,c] apart into separate values
    // when it feeds an unbounded option, which would destroy JSON coefficient
    // arrays. A leading space defeats that expansion, and every form reader
    // skips leading whitespace.
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc));
    for (int i = 0; i < argc; ++i) {
        std::string a = argv[i];
        if (i > 0 && a.size() >= 2 && a.front() == '[' && a.back() == ']')
            a.insert(a.begin(), ' ');
        args.push_back(std::move(a));
    }
    std::vector<const char*> argp;
    argp.reserve(args.size());
    for (const std::string& a : args) argp.push_back(a.c_str());

    try {
        app.parse(argc, argp.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error("parse", e.what());
        return 2;
    } catch (const ParseError& e) {
        emit_error("parse", e.what());
        return 2;
    } catch (const PreconditionError& e) {
        emit_error("precondition", e.what());
        return 3;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return 1;
    }
    return exit_code;
}

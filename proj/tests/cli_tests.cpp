// End-to-end checks of the command line tool: spawns the real binary,
// captures stdout/stderr/exit status separately, and compares against
// hand-computed documents. The binary path arrives as argv[1].
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

using nlohmann::json;

namespace {

std::string g_binary;
int g_failures = 0;
int g_checks = 0;

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::filesystem::path temp_file(const std::string& tag) {
    return std::filesystem::temp_directory_path() /
           ("wrcomb_cli_" + std::to_string(getpid()) + "_" + tag);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string shell_quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) {
        if (c == '\'')
            q += "'\\''";
        else
            q += c;
    }
    return q + "'";
}

RunResult run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
    static int counter = 0;
    ++counter;
    auto in_path = temp_file("in" + std::to_string(counter));
    auto out_path = temp_file("out" + std::to_string(counter));
    auto err_path = temp_file("err" + std::to_string(counter));
    {
        std::ofstream in(in_path, std::ios::binary);
        in << stdin_text;
    }

    std::string cmd = shell_quote(g_binary);
    for (const std::string& a : args) cmd += " " + shell_quote(a);
    cmd += " < " + shell_quote(in_path.string());
    cmd += " > " + shell_quote(out_path.string());
    cmd += " 2> " + shell_quote(err_path.string());

    int status = std::system(cmd.c_str());
    RunResult res;
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    res.out = slurp(out_path);
    res.err = slurp(err_path);
    std::filesystem::remove(in_path);
    std::filesystem::remove(out_path);
    std::filesystem::remove(err_path);
    return res;
}

void fail(const std::string& what, const RunResult& res) {
    ++g_failures;
    std::cerr << "FAIL: " << what << "\n  exit: " << res.exit_code << "\n  stdout: " << res.out
              << "\n  stderr: " << res.err << "\n";
}

void expect(bool ok, const std::string& what, const RunResult& res) {
    ++g_checks;
    if (!ok) fail(what, res);
}

json parse_stdout(const RunResult& res, const std::string& what) {
    try {
        return json::parse(res.out);
    } catch (const json::exception&) {
        fail(what + ": stdout is not JSON", res);
        return json();
    }
}

// stderr diagnostics are single-line {"error": {"code", "message"}} documents
std::string error_code(const RunResult& res) {
    try {
        json doc = json::parse(res.err);
        return doc.at("error").at("code").get<std::string>();
    } catch (const json::exception&) {
        return "";
    }
}

void check_transvectant() {
    RunResult res = run({"transvect", "x1^2", "x2^2", "2"});
    expect(res.exit_code == 0, "transvect exit", res);
    json doc = parse_stdout(res, "transvect");
    expect(doc["order"] == 0, "transvect order", res);
    expect(doc["coeffs"] == json::array({"1"}), "transvect value", res);

    // JSON input spellings are interchangeable with expressions
    RunResult arr = run({"transvect", "[1,0,0]", "{\"order\": 2, \"coeffs\": [0,0,1]}", "2"});
    expect(arr.out == res.out, "transvect json input", arr);
}

void check_determinism() {
    std::vector<std::string> args{"combinants", "x1^3", "x2^3"};
    RunResult a = run(args);
    RunResult b = run(args);
    expect(a.exit_code == 0, "combinants exit", a);
    expect(a.out == b.out && a.err == b.err, "byte-identical reruns", b);
}

void check_combinants() {
    RunResult res = run({"combinants", "x1^3", "x2^3"});
    json doc = parse_stdout(res, "combinants");
    expect(doc["r"] == 2 && doc["d"] == 3, "combinants shape", res);
    expect(doc["components"]["0"]["coeffs"] == json::array({"0", "0", "1", "0", "0"}),
           "combinants C_0", res);
    expect(doc["components"]["2"]["coeffs"] == json::array({"-1/6"}), "combinants C_2", res);
}

void check_wronskian() {
    RunResult res = run({"wronskian", "x1^2", "x2^2", "x1*x2"});
    json doc = parse_stdout(res, "wronskian");
    expect(doc["order"] == 0, "wronskian order", res);
    expect(doc["coeffs"] == json::array({"-1/2"}), "wronskian value", res);

    RunResult bin = run({"--binomial", "wronskian", "[1,0,0]", "[0,0,1]"});
    json bdoc = parse_stdout(bin, "wronskian binomial");
    expect(bdoc["coeffs"] == json::array({"0", "1/2", "0"}), "binomial coefficients", bin);

    // the flag also binds after the subcommand name
    RunResult bin2 = run({"wronskian", "--binomial", "[1,0,0]", "[0,0,1]"});
    expect(bin2.out == bin.out, "binomial flag position", bin2);
}

void check_kernel_and_recover() {
    RunResult comb = run({"combinants", "x1^3", "x2^3"});
    auto doc_path = temp_file("combinants.json");
    {
        std::ofstream out(doc_path, std::ios::binary);
        out << comb.out;
    }

    RunResult ker = run({"psi-kernel", doc_path.string()});
    json kdoc = parse_stdout(ker, "psi-kernel");
    expect(ker.exit_code == 0, "psi-kernel exit", ker);
    expect(kdoc["rank"] == 2 && kdoc["rank_bound"] == 2, "psi-kernel rank", ker);
    expect(kdoc["kernel_dimension"] == 2, "psi-kernel dimension", ker);
    expect(kdoc["in_image"] == true, "psi-kernel membership", ker);
    expect(kdoc["kernel_basis"][0]["coeffs"] == json::array({"1", "0", "0", "0"}) &&
               kdoc["kernel_basis"][1]["coeffs"] == json::array({"0", "0", "0", "1"}),
           "psi-kernel basis", ker);

    // same document through stdin
    RunResult piped = run({"psi-kernel", "-"}, comb.out);
    expect(piped.out == ker.out, "psi-kernel stdin", piped);

    RunResult rec = run({"recover", doc_path.string()});
    json rdoc = parse_stdout(rec, "recover");
    expect(rec.exit_code == 0, "recover exit", rec);
    expect(rdoc["recovered"] == true, "recover status", rec);
    expect(rdoc["scale"] == "1", "recover scale", rec);
    expect(rdoc["subspace"]["basis"][0]["coeffs"] == json::array({"1", "0", "0", "0"}),
           "recover basis", rec);
    std::filesystem::remove(doc_path);

    // a vector outside the image: rank is too large, exit code 4
    std::string junk =
        "{\"r\": 2, \"d\": 3, \"components\": {\"0\": [1,0,0,0,0], \"2\": [\"1\"]}}";
    RunResult off = run({"recover", "-"}, junk);
    expect(off.exit_code == 4, "recover off-image exit", off);
    expect(error_code(off) == "not_in_image", "recover off-image code", off);
    json odoc = parse_stdout(off, "recover off-image doc");
    expect(odoc["recovered"] == false, "recover off-image status", off);
}

void check_gamma_and_keyprop() {
    RunResult res = run({"gamma", "x1^3", "1", "x1^3", "x2^3"});
    json doc = parse_stdout(res, "gamma");
    // Gamma_1 = -B W = -x1^5 x2^2
    expect(doc["order"] == 7, "gamma order", res);
    expect(doc["coeffs"] == json::array({"0", "0", "-1", "0", "0", "0", "0", "0"}),
           "gamma value", res);

    RunResult kp = run({"verify-keyprop", "x1^3 + 2*x2^3", "x1^3", "x2^3"});
    json kdoc = parse_stdout(kp, "verify-keyprop");
    expect(kp.exit_code == 0, "verify-keyprop exit", kp);
    expect(kdoc["all"] == true, "verify-keyprop verdict", kp);
    expect(kdoc["identities"]["vanishing_below_r_minus_1"] == true &&
               kdoc["identities"]["product_at_r_minus_1"] == true &&
               kdoc["identities"]["transvectant_at_r"] == true,
           "verify-keyprop identities", kp);
}

void check_embed() {
    RunResult res = run({"embed", "x1^3", "x2^3"});
    json doc = parse_stdout(res, "embed");
    expect(res.exit_code == 0, "embed exit", res);
    expect(doc["r"] == 2 && doc["d"] == 3, "embed shape", res);
    expect(doc["coordinates"] == json::array({"0", "0", "6", "0", "0", "-1"}),
           "embed normalized coordinates", res);
    expect(doc["component_orders"]["0"] == 4 && doc["component_orders"]["2"] == 0,
           "embed component orders", res);

    // any basis of the subspace embeds to the same point
    RunResult other = run({"embed", "x1^3 + x2^3", "x1^3 - x2^3"});
    expect(other.out == res.out, "embed basis independence", other);
}

void check_verify_suites() {
    RunResult res = run({"verify-suite", "--seed", "3", "--cases", "2"});
    json doc = parse_stdout(res, "verify-suite");
    expect(res.exit_code == 0, "verify-suite exit", res);
    expect(doc["all_ok"] == true, "verify-suite verdict", res);
    expect(doc["suites"].is_array() && doc["suites"].size() >= 20, "verify-suite count", res);

    RunResult q = run({"quintic-identity", "--seed", "2", "--cases", "2"});
    json qdoc = parse_stdout(q, "quintic-identity");
    expect(q.exit_code == 0, "quintic-identity exit", q);
    expect(qdoc["ok"] == true, "quintic-identity verdict", q);
    expect(qdoc["expected_coefficients"] == json::array({"50", "-15", "-40"}),
           "quintic-identity coefficients", q);
}

void check_error_classes() {
    RunResult parse = run({"transvect", "x1 +", "x2", "1"});
    expect(parse.exit_code == 2, "malformed expression exit", parse);
    expect(error_code(parse) == "parse", "malformed expression code", parse);
    expect(parse.out.empty(), "no stdout on parse error", parse);

    RunResult pre = run({"wronskian", "x1^2", "x1^3"});
    expect(pre.exit_code == 3, "order mismatch exit", pre);
    expect(error_code(pre) == "precondition", "order mismatch code", pre);

    RunResult badsub = run({"frobnicate"});
    expect(badsub.exit_code == 2, "unknown subcommand exit", badsub);

    RunResult noargs = run({"transvect", "x1^2"});
    expect(noargs.exit_code == 2, "missing arguments exit", noargs);

    RunResult help = run({"--help"});
    expect(help.exit_code == 0, "help exit", help);
    expect(help.out.find("transvect") != std::string::npos, "help lists subcommands", help);

    RunResult badjson = run({"psi-kernel", "-"}, "{not json");
    expect(badjson.exit_code == 2, "bad document exit", badjson);
    expect(error_code(badjson) == "parse", "bad document code", badjson);

    // structurally valid but identically zero: precondition, not parse
    std::string zero =
        "{\"r\": 2, \"d\": 3, \"components\": {\"0\": [0,0,0,0,0], \"2\": [0]}}";
    RunResult zerodoc = run({"psi-kernel", "-"}, zero);
    expect(zerodoc.exit_code == 3, "zero vector exit", zerodoc);
    expect(error_code(zerodoc) == "precondition", "zero vector code", zerodoc);

    RunResult nofile = run({"recover", "/nonexistent/path.json"});
    expect(nofile.exit_code != 0, "missing file fails", nofile);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-wrcomb-binary>\n";
        return 2;
    }
    g_binary = argv[1];

    check_transvectant();
    check_determinism();
    check_combinants();
    check_wronskian();
    check_kernel_and_recover();
    check_gamma_and_keyprop();
    check_embed();
    check_verify_suites();
    check_error_classes();

    if (g_failures == 0) {
        std::cout << g_checks << " CLI checks passed\n";
        return 0;
    }
    std::cerr << g_failures << " of " << g_checks << " CLI checks failed\n";
    return 1;
}

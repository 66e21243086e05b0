#include "wrcomb/form_io.hpp"

#include "wrcomb/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace wrcomb::io {

namespace {

using nlohmann::json;

constexpr int kMaxExponent = 512;

Rational rational_from_json(const json& j) {
    if (j.is_number_integer() || j.is_number_unsigned())
        return Rational::from_string(j.dump());
    if (j.is_string())
        return Rational::from_string(j.get<std::string>());
    if (j.is_number_float())
        throw ParseError("floating point coefficients are not accepted; "
                         "use integers or \"p/q\" strings");
    throw ParseError("coefficient must be an integer or a \"p/q\" string");
}

std::vector<Rational> coeffs_from_json(const json& arr) {
    if (!arr.is_array() || arr.empty())
        throw ParseError("coefficient list must be a non-empty array");
    std::vector<Rational> out;
    out.reserve(arr.size());
    for (const json& v : arr)
        out.push_back(rational_from_json(v));
    return out;
}

BinaryForm form_from_coeffs(int order, std::vector<Rational> coeffs, bool binomial) {
    if (binomial)
        return BinaryForm::from_binomial(order, coeffs);
    return BinaryForm(order, std::move(coeffs));
}

int int_field(const json& obj, const char* key) {
    if (!obj.contains(key))
        throw ParseError(std::string("missing field \"") + key + "\"");
    const json& v = obj.at(key);
    if (!v.is_number_integer() && !v.is_number_unsigned())
        throw ParseError(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

BinaryForm form_from_json(const json& j, bool binomial, int required_order = -1) {
    if (j.is_array()) {
        std::vector<Rational> coeffs = coeffs_from_json(j);
        int order = static_cast<int>(coeffs.size()) - 1;
        if (required_order >= 0 && order != required_order)
            throw ParseError("expected " + std::to_string(required_order + 1)
                             + " coefficients, got " + std::to_string(coeffs.size()));
        return form_from_coeffs(order, std::move(coeffs), binomial);
    }
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            if (key != "order" && key != "coeffs")
                throw ParseError("unexpected field \"" + key + "\" in form object");
        int order = int_field(j, "order");
        if (order < 0)
            throw ParseError("form order must be nonnegative");
        if (!j.contains("coeffs"))
            throw ParseError("missing field \"coeffs\"");
        std::vector<Rational> coeffs = coeffs_from_json(j.at("coeffs"));
        if (coeffs.size() != static_cast<std::size_t>(order) + 1)
            throw ParseError("form object order " + std::to_string(order)
                             + " does not match its " + std::to_string(coeffs.size())
                             + " coefficients");
        if (required_order >= 0 && order != required_order)
            throw ParseError("expected a form of order " + std::to_string(required_order)
                             + ", got order " + std::to_string(order));
        return form_from_coeffs(order, std::move(coeffs), binomial);
    }
    throw ParseError("form must be a JSON array or object");
}

// --- polynomial expressions ------------------------------------------------

struct Token {
    enum Kind { Num, Var1, Var2, Plus, Minus, Times, Caret, End } kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                ++i;
            out.push_back({Token::Num, std::string(text.substr(start, i - start)), start});
            continue;
        }
        if (c == 'x') {
            if (i + 1 < text.size() && (text[i + 1] == '1' || text[i + 1] == '2')) {
                out.push_back({text[i + 1] == '1' ? Token::Var1 : Token::Var2,
                               std::string(text.substr(i, 2)), i});
                i += 2;
                continue;
            }
            throw ParseError("expected x1 or x2 at position " + std::to_string(i));
        }
        switch (c) {
        case '+': out.push_back({Token::Plus, "+", i}); break;
        case '-': out.push_back({Token::Minus, "-", i}); break;
        case '*': out.push_back({Token::Times, "*", i}); break;
        case '^': out.push_back({Token::Caret, "^", i}); break;
        case '/': out.push_back({Token::Times, "/", i}); break; // handled in factor
        default:
            throw ParseError(std::string("unexpected character '") + c
                             + "' at position " + std::to_string(i));
        }
        ++i;
    }
    out.push_back({Token::End, "", text.size()});
    return out;
}

class ExpressionParser {
public:
    explicit ExpressionParser(std::string_view text) : toks_(tokenize(text)) {}

    BinaryForm parse() {
        int degree = -1;
        std::map<int, Rational> by_x2; // x2 exponent -> accumulated coefficient
        bool negative = accept_sign();
        while (true) {
            auto [coeff, e1, e2] = term();
            if (negative)
                coeff = -coeff;
            if (degree < 0)
                degree = e1 + e2;
            else if (e1 + e2 != degree)
                throw ParseError("expression is not homogeneous: term of degree "
                                 + std::to_string(e1 + e2) + " next to degree "
                                 + std::to_string(degree));
            by_x2[e2] += coeff;
            if (peek().kind == Token::End)
                break;
            if (peek().kind == Token::Plus)
                negative = false;
            else if (peek().kind == Token::Minus)
                negative = true;
            else
                throw ParseError("expected '+' or '-' at position "
                                 + std::to_string(peek().pos));
            ++i_;
        }
        BinaryForm out(degree);
        for (const auto& [e2, c] : by_x2)
            out += BinaryForm::monomial(degree, e2, c);
        return out;
    }

private:
    const Token& peek() const { return toks_[i_]; }

    bool accept_sign() {
        if (peek().kind == Token::Minus) {
            ++i_;
            return true;
        }
        if (peek().kind == Token::Plus)
            ++i_;
        return false;
    }

    long number(const char* what) {
        if (peek().kind != Token::Num)
            throw ParseError(std::string("expected ") + what + " at position "
                             + std::to_string(peek().pos));
        const std::string& text = toks_[i_].text;
        ++i_;
        if (text.size() > 9)
            throw ParseError("number '" + text + "' is too large");
        return std::stol(text);
    }

    // factor := NUM ['/' NUM] | (x1 | x2) ['^' NUM]
    // term := factor ('*' factor)*
    std::tuple<Rational, int, int> term() {
        Rational coeff(1);
        int e1 = 0, e2 = 0;
        bool first = true;
        while (true) {
            const Token& t = peek();
            if (t.kind == Token::Num) {
                Rational num = Rational::from_string(toks_[i_].text);
                ++i_;
                if (peek().kind == Token::Times && toks_[i_].text == "/") {
                    ++i_;
                    if (peek().kind != Token::Num)
                        throw ParseError("expected a denominator at position "
                                         + std::to_string(peek().pos));
                    Rational den = Rational::from_string(toks_[i_].text);
                    ++i_;
                    if (den.is_zero())
                        throw ParseError("zero denominator at position "
                                         + std::to_string(toks_[i_ - 1].pos));
                    coeff *= num / den;
                } else {
                    coeff *= num;
                }
            } else if (t.kind == Token::Var1 || t.kind == Token::Var2) {
                ++i_;
                long e = 1;
                if (peek().kind == Token::Caret) {
                    ++i_;
                    e = number("an exponent");
                    if (e > kMaxExponent)
                        throw ParseError("exponent " + std::to_string(e)
                                         + " is too large");
                }
                (t.kind == Token::Var1 ? e1 : e2) += static_cast<int>(e);
            } else {
                if (first)
                    throw ParseError("expected a term at position "
                                     + std::to_string(t.pos));
                break;
            }
            first = false;
            if (peek().kind == Token::Times && toks_[i_].text == "*")
                ++i_;
            else
                break;
        }
        return {coeff, e1, e2};
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

} // namespace

BinaryForm parse_form(std::string_view text, bool binomial) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        throw ParseError("empty form");
    if (text[first] == '[' || text[first] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what());
        }
        return form_from_json(j, binomial);
    }
    return ExpressionParser(text).parse();
}

std::vector<std::string> coeff_strings(const BinaryForm& f, bool binomial) {
    std::vector<Rational> cs = binomial ? f.binomial_coeffs() : f.coeffs();
    std::vector<std::string> out;
    out.reserve(cs.size());
    for (const Rational& c : cs)
        out.push_back(c.str());
    return out;
}

std::string form_json(const BinaryForm& f, bool binomial, int indent) {
    json j;
    j["order"] = f.order();
    j["coeffs"] = coeff_strings(f, binomial);
    return j.dump(indent);
}

CombinantVector parse_combinants(std::string_view text, bool binomial) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ParseError("combinant vector must be a JSON object");
    for (const auto& [key, value] : j.items())
        if (key != "r" && key != "d" && key != "components")
            throw ParseError("unexpected field \"" + key + "\"");
    int r = int_field(j, "r");
    int d = int_field(j, "d");
    if (r < 1 || r > d)
        throw ParseError("need 1 <= r <= d, got r = " + std::to_string(r)
                         + ", d = " + std::to_string(d));
    if (!j.contains("components") || !j.at("components").is_object())
        throw ParseError("missing \"components\" object");
    const json& comps = j.at("components");

    std::map<int, BinaryForm> parsed;
    for (int q : CombinantVector::slots(r, d)) {
        std::string key = std::to_string(q);
        if (!comps.contains(key))
            throw ParseError("missing component q = " + key);
        parsed.emplace(q, form_from_json(comps.at(key), binomial,
                                         CombinantVector::component_order(r, d, q)));
    }
    if (comps.size() != parsed.size()) {
        std::vector<std::string> known;
        for (int q : CombinantVector::slots(r, d))
            known.push_back(std::to_string(q));
        for (const auto& [key, value] : comps.items())
            if (std::find(known.begin(), known.end(), key) == known.end())
                throw ParseError("unexpected component q = " + key);
    }
    return CombinantVector(r, d, std::move(parsed));
}

std::string combinants_json(const CombinantVector& e, bool binomial, int indent) {
    json comps = json::object();
    for (const auto& [q, f] : e.components()) {
        json c;
        c["order"] = f.order();
        c["coeffs"] = coeff_strings(f, binomial);
        comps[std::to_string(q)] = std::move(c);
    }
    json j;
    j["r"] = e.r();
    j["d"] = e.d();
    j["components"] = std::move(comps);
    return j.dump(indent);
}

} // namespace wrcomb::io

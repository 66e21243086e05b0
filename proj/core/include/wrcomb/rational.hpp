#pragma once

#include "wrcomb/errors.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace wrcomb {

// Exact rational scalar on top of GMP. The wrapper guarantees the canonical
// representation everywhere: lowest terms, positive denominator, zero held
// as 0/1. All arithmetic is exact; division by zero throws.
class Rational {
public:
    Rational() = default;
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) {
        if (den == 0)
            throw PreconditionError("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : v_(n) {}
    explicit Rational(mpq_class q) : v_(std::move(q)) {
        if (v_.get_den() == 0)
            throw PreconditionError("rational with zero denominator");
        v_.canonicalize();
    }

    // Accepts "p" or "p/q" with an optional leading sign; nothing else.
    static Rational from_string(std::string_view text);

    std::string str() const {
        return v_.get_str();
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    Rational operator-() const {
        Rational out;
        out.v_ = -v_;
        return out;
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw PreconditionError("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

    static Rational factorial(unsigned long n) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), n);
        return Rational(f);
    }
    static Rational binomial(unsigned long n, unsigned long k) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), n, k);
        return Rational(b);
    }
    static Rational pow(const Rational& base, unsigned long e) {
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), base.v_.get_num().get_mpz_t(), e);
        mpz_pow_ui(den.get_mpz_t(), base.v_.get_den().get_mpz_t(), e);
        Rational out;
        out.v_ = mpq_class(num) / mpq_class(den); // den > 0, already coprime
        return out;
    }

private:
    mpq_class v_{0};
};

inline Rational Rational::from_string(std::string_view text) {
    auto digits = [](std::string_view s) {
        if (s.empty())
            return false;
        for (char c : s)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    std::string_view body = text;
    if (!body.empty() && (body.front() == '+' || body.front() == '-'))
        body.remove_prefix(1);
    std::string_view num = body, den;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
        if (!digits(den))
            throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    if (!digits(num))
        throw ParseError("malformed rational '" + std::string(text) + "'");

    mpz_class n(std::string(num), 10);
    mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
    if (d == 0)
        throw ParseError("rational with zero denominator '" + std::string(text) + "'");
    mpq_class v(n, d);
    v.canonicalize();
    if (!text.empty() && text.front() == '-')
        v = -v;
    return Rational(std::move(v));
}

} // namespace wrcomb

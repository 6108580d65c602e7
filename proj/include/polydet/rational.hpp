#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "polydet/errors.hpp"

namespace polydet {

// Arbitrary-precision rational, always reduced, denominator > 0, zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT(google-explicit-constructor)
    Rational(int n) : v_(n) {}                             // NOLINT(google-explicit-constructor)
    Rational(long long num, long long den) {
        if (den == 0) throw DivisionByZero();
        v_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    explicit Rational(const mpz_class& z) : v_(z) {}

    static Rational parse(std::string_view text) {
        std::string s(text);
        if (s.empty()) throw ParseError("empty rational");
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) {
                return Rational(mpz_class(s));
            }
            mpz_class num(s.substr(0, slash));
            mpz_class den(s.substr(slash + 1));
            if (den == 0) throw DivisionByZero();
            mpq_class q(num);
            q /= mpq_class(den);
            return Rational(std::move(q));
        } catch (const std::invalid_argument&) {
            throw ParseError("bad rational literal '" + s + "'");
        }
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    // Requires is_integer() and a value that fits in long long.
    long long to_integer() const {
        if (!is_integer()) throw std::runtime_error("rational is not an integer: " + str());
        return mpz_get_si(v_.get_num_mpz_t());
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero();
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

    // Signed integer power; negative exponents require a nonzero base.
    Rational pow(long long e) const {
        if (e == 0) return Rational(1);  // includes 0^0 = 1
        if (is_zero()) {
            if (e < 0) throw DivisionByZero();
            return Rational(0);
        }
        bool invert = e < 0;
        unsigned long long ue = invert ? static_cast<unsigned long long>(-(e + 1)) + 1ULL
                                       : static_cast<unsigned long long>(e);
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), ue);
        mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), ue);
        mpq_class out = invert ? mpq_class(den) / mpq_class(num) : mpq_class(num) / mpq_class(den);
        return Rational(std::move(out));
    }

    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

inline mpz_class binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

// Parity of e1*binom(n1,k1) + e2*binom(n2,k2)-style exponents is what the sign
// factors need; keep it exact with mpz to avoid overflow worries.
inline int parity_sign(const mpz_class& exponent) {
    return mpz_odd_p(exponent.get_mpz_t()) ? -1 : 1;
}

}  // namespace polydet

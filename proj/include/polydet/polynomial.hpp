#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polydet/errors.hpp"
#include "polydet/rational.hpp"

namespace polydet {

// Dense univariate polynomial over Q. Coefficient i belongs to x^i; no
// trailing zeros, the zero polynomial has an empty coefficient vector.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& constant) {  // NOLINT(google-explicit-constructor)
        if (!constant.is_zero()) coeffs_.push_back(constant);
    }
    Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT
    Polynomial(int constant) : Polynomial(Rational(constant)) {}   // NOLINT

    static Polynomial from_coeffs(std::vector<Rational> coeffs) {
        Polynomial p;
        p.coeffs_ = std::move(coeffs);
        p.trim();
        return p;
    }

    static Polynomial monomial(const Rational& coef, std::size_t power) {
        if (coef.is_zero()) return {};
        Polynomial p;
        p.coeffs_.assign(power + 1, Rational(0));
        p.coeffs_[power] = coef;
        return p;
    }

    static Polynomial x() { return monomial(Rational(1), 1); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    // -1 stands in for the -infinity degree of the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rational& coeff(std::size_t i) const {
        static const Rational kZero(0);
        return i < coeffs_.size() ? coeffs_[i] : kZero;
    }
    const Rational& leading() const { return coeffs_.back(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Polynomial operator-() const {
        Polynomial out(*this);
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        Polynomial out;
        out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] = a.coeff(i) + b.coeff(i);
        out.trim();
        return out;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        Polynomial out;
        out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        out.trim();
        return out;
    }

    friend Polynomial operator*(const Polynomial& a, const Rational& s) {
        if (s.is_zero()) return {};
        Polynomial out(a);
        for (auto& c : out.coeffs_) c *= s;
        return out;
    }
    friend Polynomial operator*(const Rational& s, const Polynomial& a) { return a * s; }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    struct DivMod {
        Polynomial quotient;
        Polynomial remainder;
    };

    static DivMod divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw DivisionByZero();
        Polynomial rem = a;
        Polynomial quot;
        const Rational& lead = b.leading();
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            std::size_t shift = static_cast<std::size_t>(rem.degree() - b.degree());
            Rational factor = rem.leading() / lead;
            quot += monomial(factor, shift);
            rem -= monomial(factor, shift) * b;
        }
        return {std::move(quot), std::move(rem)};
    }

    static Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw NotDivisible();
        return q;
    }

    Polynomial pow(unsigned long long e) const {
        Polynomial base = *this;
        Polynomial out(Rational(1));  // p^0 = 1, including 0^0
        while (e > 0) {
            if (e & 1ULL) out *= base;
            e >>= 1ULL;
            if (e > 0) base *= base;
        }
        return out;
    }

    Polynomial monic() const {
        if (is_zero()) return {};
        return *this * (Rational(1) / leading());
    }

    static Polynomial gcd(Polynomial a, Polynomial b) {
        if (a.is_zero() && b.is_zero()) throw BothZero();
        while (!b.is_zero()) {
            Polynomial r = divmod(a, b).remainder;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    Rational eval(const Rational& point) const {
        Rational acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * point + coeffs_[i];
        return acc;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Canonical text form: descending powers, no zero terms, "0" for zero.
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const Rational& c = coeffs_[i];
            if (c.is_zero()) continue;
            bool neg = c.sign() < 0;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            Rational mag = neg ? -c : c;
            if (i == 0) {
                out += mag.str();
            } else {
                if (!mag.is_one()) out += mag.str() + "*";
                out += "x";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

    static Polynomial parse(std::string_view text);

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

namespace detail {

inline void skip_spaces(std::string_view& s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
}

// One term: <rational> | <rational>*x | <rational>*x^<k> | x | x^<k>
inline Polynomial parse_term(std::string_view term) {
    Rational coef(1);
    std::size_t power = 0;
    auto xpos = term.find('x');
    if (xpos == std::string_view::npos) {
        return Polynomial(Rational::parse(term));
    }
    std::string_view head = term.substr(0, xpos);
    std::string_view tail = term.substr(xpos + 1);
    if (!head.empty()) {
        if (head.back() != '*') throw ParseError("expected '*' before x in '" + std::string(term) + "'");
        coef = Rational::parse(head.substr(0, head.size() - 1));
    }
    if (!tail.empty()) {
        if (tail.front() != '^') throw ParseError("expected '^' after x in '" + std::string(term) + "'");
        tail.remove_prefix(1);
        if (tail.empty()) throw ParseError("missing exponent in '" + std::string(term) + "'");
        std::size_t pos = 0;
        power = std::stoul(std::string(tail), &pos);
        if (pos != tail.size()) throw ParseError("bad exponent in '" + std::string(term) + "'");
    } else {
        power = 1;
    }
    return Polynomial::monomial(coef, power);
}

}  // namespace detail

inline Polynomial Polynomial::parse(std::string_view text) {
    detail::skip_spaces(text);
    if (text.empty()) throw ParseError("empty polynomial");
    Polynomial out;
    bool negate = false;
    if (text.front() == '-') {
        negate = true;
        text.remove_prefix(1);
    }
    while (true) {
        detail::skip_spaces(text);
        std::size_t end = 0;
        while (end < text.size() && text[end] != ' ') ++end;
        if (end == 0) throw ParseError("dangling sign");
        Polynomial term = detail::parse_term(text.substr(0, end));
        out += negate ? -term : term;
        text.remove_prefix(end);
        detail::skip_spaces(text);
        if (text.empty()) break;
        if (text.front() == '+') negate = false;
        else if (text.front() == '-') negate = true;
        else throw ParseError("expected '+' or '-' between terms");
        text.remove_prefix(1);
    }
    return out;
}

}  // namespace polydet

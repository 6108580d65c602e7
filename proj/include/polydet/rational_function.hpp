#pragma once

#include <string>
#include <utility>

#include "polydet/errors.hpp"
#include "polydet/polynomial.hpp"

namespace polydet {

// Quotient of polynomials in canonical form: gcd(numer, denom) = 1 and the
// denominator is monic, so structural equality is value equality.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Rational(1)) {}
    RationalFunction(const Polynomial& p) : num_(p), den_(Rational(1)) {}  // NOLINT
    RationalFunction(const Rational& r) : num_(r), den_(Rational(1)) {}    // NOLINT
    RationalFunction(long v) : num_(Rational(v)), den_(Rational(1)) {}     // NOLINT
    RationalFunction(int v) : num_(Rational(v)), den_(Rational(1)) {}      // NOLINT

    RationalFunction(Polynomial numer, Polynomial denom)
        : num_(std::move(numer)), den_(std::move(denom)) {
        if (den_.is_zero()) throw DivisionByZero();
        normalize();
    }

    const Polynomial& numer() const { return num_; }
    const Polynomial& denom() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    RationalFunction operator-() const {
        RationalFunction out(*this);
        out.num_ = -out.num_;
        return out;
    }

    RationalFunction inverse() const {
        if (is_zero()) throw DivisionByZero();
        return RationalFunction(den_, num_);
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw DivisionByZero();
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        return RationalFunction(num_.pow(static_cast<unsigned long long>(e)),
                                den_.pow(static_cast<unsigned long long>(e)));
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Polynomial(Rational(1));
            return;
        }
        Polynomial g = Polynomial::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = Polynomial::exact_div(num_, g);
            den_ = Polynomial::exact_div(den_, g);
        }
        Rational lead = den_.leading();
        if (!lead.is_one()) {
            Rational inv = Rational(1) / lead;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    Polynomial num_;
    Polynomial den_;
};

}  // namespace polydet

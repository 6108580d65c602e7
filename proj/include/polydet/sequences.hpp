#pragma once

#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "polydet/errors.hpp"
#include "polydet/polynomial.hpp"
#include "polydet/rational.hpp"

namespace polydet {

// The six parameters (p,q,r;a,b,c): P_0 = p, P_1 = qx + r,
// P_{n+2} = (ax+b)P_{n+1} + cP_n, extended to n < 0 through division by c.
struct RecurrenceSpec {
    Rational p, q, r, a, b, c;

    RecurrenceSpec(Rational p_, Rational q_, Rational r_, Rational a_, Rational b_, Rational c_)
        : p(std::move(p_)), q(std::move(q_)), r(std::move(r_)),
          a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
        if (c.is_zero()) throw InvalidSpec("c must be nonzero");
    }

    RecurrenceSpec companion() const { return {0, 0, 1, a, b, c}; }

    bool same_recurrence(const RecurrenceSpec& o) const {
        return a == o.a && b == o.b && c == o.c;
    }

    friend bool operator==(const RecurrenceSpec& x, const RecurrenceSpec& y) {
        return x.p == y.p && x.q == y.q && x.r == y.r && x.a == y.a && x.b == y.b && x.c == y.c;
    }

    std::string str() const {
        return p.str() + "," + q.str() + "," + r.str() + ";" +
               a.str() + "," + b.str() + "," + c.str();
    }

    // Literal `p,q,r;a,b,c` or one of the shorthands fib/lucas/chebT/chebS.
    static RecurrenceSpec parse(std::string_view text);
};

namespace families {

inline RecurrenceSpec fibonacci() { return {0, 0, 1, 1, 0, 1}; }
inline RecurrenceSpec lucas() { return {2, 1, 0, 1, 0, 1}; }
inline RecurrenceSpec chebyshev_t() { return {1, 1, 0, 2, 0, -1}; }
inline RecurrenceSpec chebyshev_s() { return {1, 2, 0, 2, 0, -1}; }
inline RecurrenceSpec companion_u(const Rational& a, const Rational& b, const Rational& c) {
    return {0, 0, 1, a, b, c};
}
inline RecurrenceSpec favard(const Rational& q, const Rational& r, const Rational& b,
                             const Rational& c) {
    if (q.is_zero()) throw InvalidSpec("favard family requires q != 0");
    if (c.is_zero()) throw InvalidSpec("favard family requires c != 0");
    return {1, q, r, 1, b, c};
}

}  // namespace families

inline RecurrenceSpec RecurrenceSpec::parse(std::string_view text) {
    if (text == "fib") return families::fibonacci();
    if (text == "lucas") return families::lucas();
    if (text == "chebT") return families::chebyshev_t();
    if (text == "chebS") return families::chebyshev_s();
    auto semi = text.find(';');
    if (semi == std::string_view::npos) throw ParseError("spec literal needs ';': " + std::string(text));
    auto split3 = [](std::string_view part) {
        std::vector<Rational> out;
        std::size_t start = 0;
        while (true) {
            auto comma = part.find(',', start);
            std::string_view piece = comma == std::string_view::npos
                                         ? part.substr(start)
                                         : part.substr(start, comma - start);
            out.push_back(Rational::parse(piece));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (out.size() != 3) throw ParseError("expected three components");
        return out;
    };
    auto init = split3(text.substr(0, semi));
    auto rec = split3(text.substr(semi + 1));
    return {init[0], init[1], init[2], rec[0], rec[1], rec[2]};
}

// Delta_P = (q^2-apq)x^2 + (2qr-apr-bpq)x + (r^2-bpr-cp^2); equals P_1^2 - P_0 P_2.
inline Polynomial discriminant(const RecurrenceSpec& s) {
    std::vector<Rational> coeffs{
        s.r * s.r - s.b * s.p * s.r - s.c * s.p * s.p,
        Rational(2) * s.q * s.r - s.a * s.p * s.r - s.b * s.p * s.q,
        s.q * s.q - s.a * s.p * s.q,
    };
    return Polynomial::from_coeffs(std::move(coeffs));
}

// Bidirectional memoized evaluator n -> P_n. The cache grows from the stored
// contiguous frontier [lo, hi]; term() is safe to call concurrently.
class PolySequence {
public:
    explicit PolySequence(RecurrenceSpec spec) : spec_(std::move(spec)) {
        cache_[0] = Polynomial(spec_.p);
        cache_[1] = Polynomial::monomial(spec_.q, 1) + Polynomial(spec_.r);
        lo_ = 0;
        hi_ = 1;
    }

    const RecurrenceSpec& spec() const { return spec_; }

    Polynomial term(long long n) const {
        std::lock_guard<std::mutex> lock(mu_);
        Polynomial shift = Polynomial::monomial(spec_.a, 1) + Polynomial(spec_.b);
        while (hi_ < n) {
            cache_[hi_ + 1] = shift * cache_[hi_] + Polynomial(spec_.c) * cache_[hi_ - 1];
            ++hi_;
        }
        Rational c_inv = Rational(1) / spec_.c;
        while (lo_ > n) {
            // P_n = (P_{n+2} - (ax+b) P_{n+1}) / c
            cache_[lo_ - 1] = (cache_[lo_ + 1] - shift * cache_[lo_]) * c_inv;
            --lo_;
        }
        return cache_.at(n);
    }

    // P_n^<m> = P_n P_{n+1} ... P_{n+m-1}; m = 0 gives 1.
    Polynomial rising_power(long long n, long long m) const {
        Polynomial out(Rational(1));
        for (long long i = 0; i < m; ++i) out *= term(n + i);
        return out;
    }

    Rational specialize(const Rational& point, long long n) const { return term(n).eval(point); }

private:
    RecurrenceSpec spec_;
    mutable std::map<long long, Polynomial> cache_;
    mutable long long lo_ = 0, hi_ = 1;
    mutable std::mutex mu_;
};

}  // namespace polydet

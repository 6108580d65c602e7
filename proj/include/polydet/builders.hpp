#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polydet/errors.hpp"
#include "polydet/matrix.hpp"
#include "polydet/sequences.hpp"

namespace polydet {

// Integer index sequences (d_1..d_m) and (e_1..e_m) for the product matrices.
struct IndexProfile {
    std::vector<long long> d;
    std::vector<long long> e;
};

// One parameterized instance of an identity: free parameters s, k, n, the
// matrix order m, the rising-power block size d, and an optional profile.
struct IdentityCase {
    RecurrenceSpec spec;
    long long s = 0;
    long long k = 1;
    long long n = 0;
    long long m = 1;
    long long d = 1;
    std::optional<IndexProfile> profile;
};

// [P_{s+k(n+i+j)}^m], 0 <= i,j <= m
inline PolyMatrix power_matrix(const PolySequence& seq, const IdentityCase& c) {
    std::size_t size = static_cast<std::size_t>(c.m) + 1;
    PolyMatrix out(size, size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            out.at(i, j) = seq.term(c.s + c.k * (c.n + static_cast<long long>(i + j)))
                               .pow(static_cast<unsigned long long>(c.m));
    return out;
}

// entry(i,j) = prod_{f=j+1}^m P_{s+k(n+i+d_f)} * prod_{g=1}^j P_{s+k(n+i+e_g)}
inline PolyMatrix product_matrix(const PolySequence& seq, const IdentityCase& c) {
    if (!c.profile) throw MissingProfile();
    const auto& d = c.profile->d;
    const auto& e = c.profile->e;
    if (static_cast<long long>(d.size()) != c.m || static_cast<long long>(e.size()) != c.m)
        throw LengthMismatch();
    std::size_t size = static_cast<std::size_t>(c.m) + 1;
    PolyMatrix out(size, size);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            Polynomial entry(Rational(1));
            for (std::size_t f = j + 1; f <= static_cast<std::size_t>(c.m); ++f)
                entry *= seq.term(c.s + c.k * (c.n + static_cast<long long>(i) + d[f - 1]));
            for (std::size_t g = 1; g <= j; ++g)
                entry *= seq.term(c.s + c.k * (c.n + static_cast<long long>(i) + e[g - 1]));
            out.at(i, j) = std::move(entry);
        }
    }
    return out;
}

// [1 / P_{s+k(n+i+j)}]; every referenced term must be nonzero.
inline RatMatrix reciprocal_matrix(const PolySequence& seq, const IdentityCase& c) {
    std::size_t size = static_cast<std::size_t>(c.m) + 1;
    RatMatrix out(size, size);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            Polynomial t = seq.term(c.s + c.k * (c.n + static_cast<long long>(i + j)));
            if (t.is_zero()) throw ZeroDenominator(i * size + j);
            out.at(i, j) = RationalFunction(Polynomial(Rational(1)), std::move(t));
        }
    }
    return out;
}

// d x d matrix of rising powers [P_{n+i+j}^<m>]
inline PolyMatrix rising_matrix(const PolySequence& seq, const IdentityCase& c) {
    std::size_t size = static_cast<std::size_t>(c.d);
    PolyMatrix out(size, size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j)
            out.at(i, j) = seq.rising_power(c.n + static_cast<long long>(i + j), c.m);
    return out;
}

}  // namespace polydet

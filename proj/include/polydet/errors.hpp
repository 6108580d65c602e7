#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polydet {

struct DivisionByZero : std::runtime_error {
    DivisionByZero() : std::runtime_error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

struct NotDivisible : std::runtime_error {
    NotDivisible() : std::runtime_error("exact division left a nonzero remainder") {}
};

struct BothZero : std::runtime_error {
    BothZero() : std::runtime_error("gcd of two zero polynomials") {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error("parse error: " + what) {}
};

struct InvalidSpec : std::runtime_error {
    explicit InvalidSpec(const std::string& what) : std::runtime_error("invalid recurrence spec: " + what) {}
};

struct TooLarge : std::runtime_error {
    TooLarge() : std::runtime_error("matrix too large for cofactor expansion (cap 6)") {}
};

struct OutOfBounds : std::runtime_error {
    OutOfBounds() : std::runtime_error("minor reference out of bounds") {}
};

// flat row-major index of the offending entry
struct ZeroDenominator : std::runtime_error {
    std::size_t index;
    explicit ZeroDenominator(std::size_t idx)
        : std::runtime_error("zero denominator at entry " + std::to_string(idx)), index(idx) {}
};

struct MissingProfile : std::runtime_error {
    MissingProfile() : std::runtime_error("identity case requires an index profile") {}
};

struct LengthMismatch : std::runtime_error {
    LengthMismatch() : std::runtime_error("input lists have inconsistent lengths") {}
};

struct UndefinedIndex : std::runtime_error {
    explicit UndefinedIndex(long long idx)
        : std::runtime_error("family has no entry at index " + std::to_string(idx)) {}
};

struct MixedRecurrence : std::runtime_error {
    MixedRecurrence() : std::runtime_error("sequences do not share the recurrence coefficients (a,b,c)") {}
};

}  // namespace polydet

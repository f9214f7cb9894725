#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "wordbench/error.hpp"

namespace wb {

// Exact rational; always stored in lowest terms with positive denominator.
// Exponent thresholds are compared with these, never with floating point.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }
    explicit Rational(long long n) : num(n), den(1) {}

    void normalize() {
        if (den == 0) fail("ZeroDenominator", "rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return a.num * b.den <= b.num * a.den;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    std::string str() const {
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

// Accepts "p/q" or a bare integer "p".
Rational parse_rational(const std::string& s);

} // namespace wb

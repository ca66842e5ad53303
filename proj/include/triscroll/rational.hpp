#pragma once

#include <numeric>
#include <string>

#include "errors.hpp"

namespace triscroll {

/// Exact rational number over long long, always stored reduced with a
/// positive denominator. Every bound in this library is compared exactly;
/// several of the interesting cases sit on a bound with equality, so no
/// floating point is allowed anywhere near these values.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0)
            throw IntegralityError("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0)
            den = 1;
    }

    bool is_integer() const { return den == 1; }

    /// Exact integer value; throws if the value is not integral.
    long long as_integer() const {
        if (!is_integer())
            throw IntegralityError("expected integer, got " + str());
        return num;
    }

    /// Canonical "p/q" rendering (reduced, q >= 1), e.g. "50/3", "21/1".
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0)
            throw IntegralityError("rational division by zero");
        return Rational(a.num * b.den, a.den * b.num);
    }
    friend Rational operator-(const Rational& a) { return Rational(-a.num, a.den); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }
};

inline Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }

} // namespace triscroll

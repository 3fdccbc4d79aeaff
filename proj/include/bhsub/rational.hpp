#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>

#include "bhsub/errors.hpp"

namespace bhsub {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number over arbitrary-precision integers.
///
/// Canonical form invariants, maintained by every operation:
///   - denominator > 0 (sign lives in the numerator)
///   - gcd(|numerator|, denominator) == 1
///   - zero is represented as 0/1
///
/// Values are immutable after construction; all operations are pure.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}

    /// Canonicalizes n/d. Throws invalid_input when d == 0.
    Rational(BigInt n, BigInt d);

    Rational(long long n, long long d) : Rational(BigInt(n), BigInt(d)) {}

    /// Parses "n/d" or a bare integer string.
    static Rational parse(const std::string& text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const;
    Rational abs() const { return num_ < 0 ? -*this : *this; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    /// Throws numeric_error on division by zero.
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// Exact integer power, n >= 0.
    Rational pow(unsigned n) const;

    /// Serialized form is always "n/d", e.g. "-25/256", "0/1".
    std::string str() const;

    double to_double() const;

private:
    BigInt num_;
    BigInt den_;
};

/// rat_normalize of the reference interface: canonical form from raw parts.
inline Rational rat_normalize(BigInt n, BigInt d) { return Rational(std::move(n), std::move(d)); }

} // namespace bhsub

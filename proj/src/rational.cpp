#include "bhsub/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace bhsub {

namespace {

void canonicalize(BigInt& n, BigInt& d) {
    if (d == 0) throw invalid_input("rational: zero denominator");
    if (n == 0) {
        d = 1;
        return;
    }
    if (d < 0) {
        n = -n;
        d = -d;
    }
    BigInt g = boost::multiprecision::gcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
}

} // namespace

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    canonicalize(num_, den_);
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::runtime_error&) {
        throw invalid_input("rational: cannot parse '" + text + "'");
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw numeric_error("rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::pow(unsigned n) const {
    Rational acc(1);
    Rational base = *this;
    while (n > 0) {
        if (n & 1u) acc *= base;
        base *= base;
        n >>= 1u;
    }
    return acc;
}

std::string Rational::str() const {
    return num_.str() + "/" + den_.str();
}

double Rational::to_double() const {
    boost::multiprecision::cpp_rational q(num_, den_);
    return q.convert_to<double>();
}

} // namespace bhsub

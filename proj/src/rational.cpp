#include "coarsequot/rational.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "coarsequot/errors.hpp"

namespace coarsequot {

namespace {

long long checked_narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw Error("rational overflow");
    return static_cast<long long>(v);
}

} // namespace

Rational::Rational(long long n, long long d) : num_(n), den_(d) {
    if (d == 0) throw Error("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
    if (num_ == 0) den_ = 1;
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    auto gcd128 = [](__int128 a, __int128 b) {
        if (a < 0) a = -a;
        while (b) { __int128 t = a % b; a = b; b = t; }
        return a;
    };
    __int128 gg = gcd128(n, d);
    if (gg > 1) { n /= gg; d /= gg; }
    num_ = checked_narrow(n);
    den_ = checked_narrow(d);
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    long long g1 = std::gcd(num_ < 0 ? -num_ : num_, o.den_);
    long long g2 = std::gcd(o.num_ < 0 ? -o.num_ : o.num_, den_);
    __int128 n = static_cast<__int128>(num_ / g1) * (o.num_ / g2);
    __int128 d = static_cast<__int128>(den_ / g2) * (o.den_ / g1);
    num_ = checked_narrow(n);
    den_ = checked_narrow(d);
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw Error("rational division by zero");
    return *this *= Rational(o.den_, o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    __int128 lhs = static_cast<__int128>(num_) * o.den_;
    __int128 rhs = static_cast<__int128>(o.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        long long n = std::stoll(text.substr(0, slash));
        long long d = std::stoll(text.substr(slash + 1));
        return Rational(n, d);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        long long den = 1;
        for (size_t i = dot + 1; i < text.size(); ++i) den *= 10;
        return Rational(std::stoll(digits), den);
    }
    return Rational(std::stoll(text));
}

Rational rat_max(const Rational& a, const Rational& b) { return a < b ? b : a; }
Rational rat_max(const Rational& a, const Rational& b, const Rational& c) {
    return rat_max(rat_max(a, b), c);
}
Rational rat_min(const Rational& a, const Rational& b) { return a < b ? a : b; }
Rational rat_abs(const Rational& a) { return a.negative() ? -a : a; }

} // namespace coarsequot

#pragma once

#include <cstdint>
#include <compare>
#include <string>

namespace coarsequot {

// Exact rational arithmetic on int64 with __int128 intermediates.
// The constants ledger formulas must hold as equalities, not tolerances,
// so everything derived from base constants goes through this type.
class Rational {
  public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d);

    static Rational parse(const std::string& text); // "p", "p/q", or decimal "3.25"

    long long num() const { return num_; }
    long long den() const { return den_; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const;

    bool is_integer() const { return den_ == 1; }
    bool negative() const { return num_ < 0; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;

  private:
    void normalize();
    long long num_;
    long long den_; // > 0 always
};

Rational rat_max(const Rational& a, const Rational& b);
Rational rat_max(const Rational& a, const Rational& b, const Rational& c);
Rational rat_min(const Rational& a, const Rational& b);
Rational rat_abs(const Rational& a);

} // namespace coarsequot

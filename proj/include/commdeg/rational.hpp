#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace commdeg {

using BigInt = boost::multiprecision::cpp_int;

BigInt ipow(std::uint64_t base, std::uint64_t exp);

/// Exact reduced fraction with positive denominator.
class Rational {
public:
  Rational() : value_(0) {}
  Rational(std::int64_t n) : value_(n) {}
  Rational(const BigInt &num, const BigInt &den);

  BigInt num() const { return boost::multiprecision::numerator(value_); }
  BigInt den() const { return boost::multiprecision::denominator(value_); }

  Rational operator+(const Rational &o) const { return Rational(Impl(value_ + o.value_)); }
  Rational operator-(const Rational &o) const { return Rational(Impl(value_ - o.value_)); }
  Rational operator*(const Rational &o) const { return Rational(Impl(value_ * o.value_)); }
  Rational operator/(const Rational &o) const;

  friend bool operator==(const Rational &a, const Rational &b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    if (a.value_ < b.value_)
      return std::strong_ordering::less;
    if (a.value_ > b.value_)
      return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "<num>/<den>", always with the denominator (1 is printed as "1/1").
  std::string str() const;
  /// Fixed-point decimal, rounded half to even.
  std::string decimal(unsigned places = 6) const;
  /// Inverse of str(); also accepts a bare integer.
  static Rational parse(std::string_view text);

private:
  using Impl = boost::multiprecision::cpp_rational;
  explicit Rational(Impl v) : value_(std::move(v)) {}
  Impl value_;
};

Rational pow(const Rational &base, std::uint64_t exp);

} // namespace commdeg

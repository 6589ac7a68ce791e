#include "commdeg/rational.hpp"

#include "commdeg/error.hpp"

#include <cctype>

namespace commdeg {

BigInt ipow(std::uint64_t base, std::uint64_t exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

Rational::Rational(const BigInt &num, const BigInt &den) {
  if (den == 0)
    throw DivisionByZero();
  value_ = Impl(num, den);
}

Rational Rational::operator/(const Rational &o) const {
  if (o.value_ == 0)
    throw DivisionByZero();
  return Rational(Impl(value_ / o.value_));
}

std::string Rational::str() const { return num().str() + "/" + den().str(); }

std::string Rational::decimal(unsigned places) const {
  BigInt n = num();
  const BigInt d = den();
  const bool negative = n < 0;
  if (negative)
    n = -n;
  const BigInt scale = ipow(10, places);
  BigInt quotient = n * scale / d;
  const BigInt twice_rem = 2 * (n * scale % d);
  if (twice_rem > d || (twice_rem == d && quotient % 2 == 1))
    ++quotient;
  std::string digits = BigInt(quotient / scale).str();
  if (places > 0) {
    std::string frac = BigInt(quotient % scale).str();
    digits += "." + std::string(places - frac.size(), '0') + frac;
  }
  return (negative && quotient != 0 ? "-" : "") + digits;
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::size_t k = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (k == s.size())
      throw InvalidParameter("malformed rational: " + std::string(text));
    for (std::size_t t = k; t < s.size(); ++t)
      if (!std::isdigit(static_cast<unsigned char>(s[t])))
        throw InvalidParameter("malformed rational: " + std::string(text));
    return BigInt(std::string(s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_int(text), 1);
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational pow(const Rational &base, std::uint64_t exp) {
  Rational result(1);
  for (std::uint64_t k = 0; k < exp; ++k)
    result = result * base;
  return result;
}

} // namespace commdeg

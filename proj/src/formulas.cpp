#include "commdeg/degree.hpp"

namespace commdeg {

namespace {

void require_q(std::uint64_t q) {
  if (q < 2)
    throw InvalidParameter("q must be >= 2");
}

Rational frac(const BigInt &num, const BigInt &den) { return Rational(num, den); }

} // namespace

Rational formula_dim1(std::uint64_t q, std::uint64_t m) {
  require_q(q);
  if (m < 1)
    throw InvalidParameter("m must be >= 1");
  return frac(ipow(q, 2 * m) + q - 1, ipow(q, 2 * m + 1));
}

Rational formula_central3(std::uint64_t q, std::uint64_t derived_dim) {
  require_q(q);
  const BigInt Q(q);
  if (derived_dim == 2)
    return frac(2 * Q * Q - 1, ipow(q, 4));
  if (derived_dim == 3)
    return frac(Q * Q * Q + Q * Q - 1, ipow(q, 5));
  throw InvalidParameter("dim L^2 must be 2 or 3 when dim L/Z(L) = 3");
}

Rational formula_class3(std::uint64_t q, std::uint64_t n) {
  require_q(q);
  if (n < 4)
    throw InvalidParameter("class-3 algebras with dim L^2 = 2 have dimension >= 4");
  const BigInt Q(q);
  const Rational tail = frac(Q * Q + Q - 1, ipow(q, 4));
  const BigInt head = n % 2 == 0 ? BigInt(Q * Q - Q) : BigInt(Q - 1);
  return frac(head, ipow(q, n)) + tail;
}

std::vector<Rational> sequence_dim1(std::uint64_t q, std::uint64_t count) {
  if (count < 1)
    throw InvalidParameter("count must be >= 1");
  std::vector<Rational> out;
  for (std::uint64_t m = 1; m <= count; ++m)
    out.push_back(formula_dim1(q, m));
  return out;
}

FamilySpec FamilySpec::parse(std::string_view name, std::uint64_t q, std::uint64_t k) {
  FamilySpec spec;
  spec.q = q;
  spec.k = k;
  if (name == "heisenberg")
    spec.kind = FamilyKind::Heisenberg;
  else if (name == "heisenberg-power")
    spec.kind = FamilyKind::HeisenbergPower;
  else if (name == "class3-even")
    spec.kind = FamilyKind::Class3Even;
  else if (name == "class3-odd")
    spec.kind = FamilyKind::Class3Odd;
  else if (name == "abelian")
    spec.kind = FamilyKind::ConstantAbelian;
  else
    throw UnknownFamily(std::string(name));
  return spec;
}

AsymptoticReport asymptotic(const FamilySpec &family, std::size_t prefix_len) {
  const std::uint64_t q = family.q;
  require_q(q);
  const BigInt Q(q);
  AsymptoticReport rep;
  switch (family.kind) {
  case FamilyKind::Heisenberg:
    rep.limit = frac(1, Q);
    for (std::size_t m = 1; m <= prefix_len; ++m)
      rep.prefix.push_back(formula_dim1(q, m));
    break;
  case FamilyKind::HeisenbergPower:
    if (family.k < 1)
      throw InvalidParameter("k must be >= 1");
    rep.limit = frac(1, ipow(q, family.k));
    // L_n = H(n) + ... + H(n), k summands; degrees multiply.
    for (std::size_t m = 1; m <= prefix_len; ++m)
      rep.prefix.push_back(pow(formula_dim1(q, m), family.k));
    break;
  case FamilyKind::Class3Even:
  case FamilyKind::Class3Odd: {
    rep.limit = frac(Q * Q + Q - 1, ipow(q, 4));
    const std::uint64_t base = family.kind == FamilyKind::Class3Even ? 4 : 5;
    for (std::size_t m = 0; m < prefix_len; ++m)
      rep.prefix.push_back(formula_class3(q, base + 2 * m));
    break;
  }
  case FamilyKind::ConstantAbelian:
    rep.limit = Rational(1);
    rep.prefix.assign(prefix_len, Rational(1));
    break;
  }
  return rep;
}

} // namespace commdeg

#include "commdeg/field.hpp"

#include "commdeg/error.hpp"

#include <map>
#include <sstream>

namespace commdeg {

namespace {

using Poly = std::vector<std::uint32_t>;

// Conway polynomials, little-endian.
const std::map<std::uint32_t, Poly> &builtin_moduli() {
  static const std::map<std::uint32_t, Poly> table = {
      {4, {1, 1, 1}},       // t^2 + t + 1
      {8, {1, 1, 0, 1}},    // t^3 + t + 1
      {9, {2, 2, 1}},       // t^2 + 2t + 2
      {16, {1, 1, 0, 0, 1}}, // t^4 + t + 1
      {25, {2, 4, 1}},      // t^2 + 4t + 2
      {27, {1, 2, 0, 1}},   // t^3 + 2t + 1
  };
  return table;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t r0 = static_cast<std::int64_t>(p), r1 = static_cast<std::int64_t>(a);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t t = r0 / r1;
    std::int64_t r2 = r0 - t * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t s2 = s0 - t * s1;
    s0 = s1;
    s1 = s2;
  }
  if (s0 < 0)
    s0 += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(s0);
}

// Remainder of num modulo a monic divisor; both little-endian.
Poly poly_rem(Poly num, const Poly &div, std::uint32_t p) {
  const std::size_t dd = div.size() - 1;
  while (num.size() > dd) {
    const std::uint64_t lead = num.back();
    if (lead != 0) {
      const std::size_t shift = num.size() - 1 - dd;
      for (std::size_t k = 0; k <= dd; ++k) {
        const std::uint64_t sub = (lead * div[k]) % p;
        num[shift + k] = static_cast<std::uint32_t>((num[shift + k] + p - sub) % p);
      }
    }
    num.pop_back();
  }
  return num;
}

} // namespace

namespace field_detail {

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p) {
  if (poly.size() < 2)
    return false;
  const std::size_t deg = poly.size() - 1;
  const Poly target(poly.begin(), poly.end());
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t k = 0; k < d; ++k)
      count *= p;
    Poly div(d + 1, 0);
    div[d] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t k = 0; k < d; ++k) {
        div[k] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      const Poly r = poly_rem(target, div, p);
      bool zero = true;
      for (auto c : r)
        zero = zero && c == 0;
      if (zero)
        return false;
    }
  }
  return true;
}

} // namespace field_detail

Field Field::make(std::uint64_t q, std::optional<std::vector<std::uint32_t>> modulus) {
  if (q < 2)
    throw NotPrimePower(q);
  if (q >= (std::uint64_t{1} << 31))
    throw InvalidParameter("field order too large: " + std::to_string(q));

  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0)
    p = q;
  std::uint32_t e = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1)
    throw NotPrimePower(q);

  auto impl = std::make_shared<Impl>();
  impl->p = static_cast<std::uint32_t>(p);
  impl->e = e;
  impl->q = static_cast<std::uint32_t>(q);

  if (modulus) {
    const Poly &m = *modulus;
    if (m.size() != e + 1 || m.back() != 1)
      throw InvalidParameter("modulus must be monic of degree " + std::to_string(e));
    for (auto c : m)
      if (c >= p)
        throw InvalidParameter("modulus coefficient out of range");
    if (!field_detail::is_irreducible(m, impl->p))
      throw ReducibleModulus("modulus is reducible over F_" + std::to_string(p));
    impl->modulus = m;
  } else if (e == 1) {
    impl->modulus = {0, 1};
  } else {
    auto it = builtin_moduli().find(impl->q);
    if (it == builtin_moduli().end())
      throw NoBuiltinModulus(q);
    if (!field_detail::is_irreducible(it->second, impl->p))
      throw ReducibleModulus("built-in modulus is reducible");
    impl->modulus = it->second;
  }

  Field f(impl);
  if (impl->q <= kTableLimit) {
    const std::uint32_t n = impl->q;
    impl->add.resize(std::size_t{n} * n);
    impl->mul.resize(std::size_t{n} * n);
    impl->neg.resize(n);
    impl->inv.resize(n);
    for (std::uint32_t a = 0; a < n; ++a) {
      impl->neg[a] = f.neg_raw(a);
      for (std::uint32_t b = 0; b < n; ++b) {
        impl->add[a * n + b] = f.add_raw(a, b);
        impl->mul[a * n + b] = f.mul_raw(a, b);
      }
    }
    // inv_raw may itself go through mul(), which is table-backed by now.
    for (std::uint32_t a = 1; a < n; ++a)
      impl->inv[a] = f.inv_raw(a);
  }
  return f;
}

std::uint32_t Field::add_raw(std::uint32_t a, std::uint32_t b) const {
  const Impl &f = *impl_;
  if (f.e == 1)
    return static_cast<std::uint32_t>((std::uint64_t{a} + b) % f.p);
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t k = 0; k < f.e; ++k) {
    const std::uint32_t ca = a % f.p, cb = b % f.p;
    out += ((ca + cb) % f.p) * scale;
    a /= f.p;
    b /= f.p;
    scale *= f.p;
  }
  return out;
}

std::uint32_t Field::neg_raw(std::uint32_t a) const {
  const Impl &f = *impl_;
  if (f.e == 1)
    return a == 0 ? 0 : f.p - a;
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t k = 0; k < f.e; ++k) {
    const std::uint32_t c = a % f.p;
    out += ((f.p - c) % f.p) * scale;
    a /= f.p;
    scale *= f.p;
  }
  return out;
}

std::uint32_t Field::mul_raw(std::uint32_t a, std::uint32_t b) const {
  const Impl &f = *impl_;
  if (f.e == 1)
    return static_cast<std::uint32_t>((std::uint64_t{a} * b) % f.p);
  const Poly ca = coeffs({a}), cb = coeffs({b});
  Poly prod(2 * f.e - 1, 0);
  for (std::uint32_t i = 0; i < f.e; ++i)
    for (std::uint32_t j = 0; j < f.e; ++j)
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + std::uint64_t{ca[i]} * cb[j]) % f.p);
  Poly r = poly_rem(std::move(prod), f.modulus, f.p);
  r.resize(f.e, 0);
  return from_coeffs(r).v;
}

std::uint32_t Field::inv_raw(std::uint32_t a) const {
  const Impl &f = *impl_;
  if (f.e == 1)
    return static_cast<std::uint32_t>(inv_mod(a, f.p));
  return pow({a}, std::uint64_t{f.q} - 2).v;
}

Fq Field::inv(Fq a) const {
  if (a.is_zero())
    throw DivisionByZero();
  if (!impl_->inv.empty())
    return {impl_->inv[a.v]};
  return {inv_raw(a.v)};
}

Fq Field::pow(Fq a, std::uint64_t k) const {
  Fq result = one();
  while (k != 0) {
    if (k & 1)
      result = mul(result, a);
    a = mul(a, a);
    k >>= 1;
  }
  return result;
}

Fq Field::from_int(std::int64_t k) const {
  const std::int64_t p = impl_->p;
  std::int64_t r = k % p;
  if (r < 0)
    r += p;
  return {static_cast<std::uint32_t>(r)};
}

Fq Field::from_coeffs(std::span<const std::uint32_t> cs) const {
  const Impl &f = *impl_;
  if (cs.size() > f.e)
    throw DimensionMismatch(f.e, cs.size());
  std::uint32_t out = 0, scale = 1;
  for (auto c : cs) {
    out += (c % f.p) * scale;
    scale *= f.p;
  }
  return {out};
}

std::vector<std::uint32_t> Field::coeffs(Fq a) const {
  const Impl &f = *impl_;
  std::vector<std::uint32_t> out(f.e);
  std::uint32_t v = a.v;
  for (auto &c : out) {
    c = v % f.p;
    v /= f.p;
  }
  return out;
}

Fq Field::from_code(std::uint64_t c) const {
  if (c >= impl_->q)
    throw InvalidParameter("element code " + std::to_string(c) +
                           " out of range for q = " + std::to_string(impl_->q));
  return {static_cast<std::uint32_t>(c)};
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "q=" << impl_->q;
  if (impl_->e > 1) {
    os << " modulus=";
    for (std::size_t k = 0; k < impl_->modulus.size(); ++k)
      os << (k ? "," : "") << impl_->modulus[k];
  }
  return os.str();
}

} // namespace commdeg

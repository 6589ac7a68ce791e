#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace commdeg {

/// Element of F_q. The value is the packed code sum_i c_i p^i of the
/// little-endian coefficient vector (c_0, ..., c_{e-1}) in F_p[t]/(modulus).
/// Codes are always canonical, so equality is plain integer equality.
struct Fq {
  std::uint32_t v = 0;

  friend constexpr auto operator<=>(Fq, Fq) = default;
  constexpr bool is_zero() const { return v == 0; }
};

/// The finite field F_q with q = p^e. Immutable; copies share tables.
class Field {
public:
  /// Builds F_q. For e > 1 and no modulus, a built-in Conway polynomial is
  /// used for q in {4, 8, 9, 16, 25, 27}. Modulus is little-endian, monic,
  /// of length e + 1.
  static Field make(std::uint64_t q,
                    std::optional<std::vector<std::uint32_t>> modulus = {});

  std::uint32_t p() const { return impl_->p; }
  std::uint32_t e() const { return impl_->e; }
  std::uint32_t q() const { return impl_->q; }
  const std::vector<std::uint32_t> &modulus() const { return impl_->modulus; }

  static constexpr Fq zero() { return {0}; }
  static constexpr Fq one() { return {1}; }

  Fq add(Fq a, Fq b) const {
    const Impl &f = *impl_;
    if (!f.add.empty())
      return {f.add[a.v * f.q + b.v]};
    return {add_raw(a.v, b.v)};
  }
  Fq neg(Fq a) const {
    const Impl &f = *impl_;
    if (!f.neg.empty())
      return {f.neg[a.v]};
    return {neg_raw(a.v)};
  }
  Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
  Fq mul(Fq a, Fq b) const {
    const Impl &f = *impl_;
    if (!f.mul.empty())
      return {f.mul[a.v * f.q + b.v]};
    return {mul_raw(a.v, b.v)};
  }
  /// Throws DivisionByZero on a = 0.
  Fq inv(Fq a) const;
  Fq pow(Fq a, std::uint64_t k) const;

  /// Image of an integer in the prime subfield.
  Fq from_int(std::int64_t k) const;
  /// Element with the given polynomial coefficients (each reduced mod p).
  Fq from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(Fq a) const;
  /// Element with code c; requires c < q.
  Fq from_code(std::uint64_t c) const;

  /// "q=<q>" or "q=<q> modulus=<c0,...,ce>" as in the algebra file header.
  std::string describe() const;

  friend bool operator==(const Field &a, const Field &b) {
    return a.impl_ == b.impl_ ||
           (a.impl_->p == b.impl_->p && a.impl_->modulus == b.impl_->modulus);
  }

private:
  struct Impl {
    std::uint32_t p = 2, e = 1, q = 2;
    std::vector<std::uint32_t> modulus;
    // Full operation tables, present when q <= kTableLimit.
    std::vector<std::uint32_t> add, mul, neg, inv;
  };
  static constexpr std::uint32_t kTableLimit = 256;

  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::uint32_t add_raw(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg_raw(std::uint32_t a) const;
  std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv_raw(std::uint32_t a) const;

  std::shared_ptr<const Impl> impl_;
};

namespace field_detail {
/// Is the little-endian monic polynomial irreducible over F_p? Trial
/// division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p);
} // namespace field_detail

} // namespace commdeg

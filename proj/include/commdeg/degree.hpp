#pragma once

#include "commdeg/algebra.hpp"
#include "commdeg/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace commdeg {

enum class Method { RankSum, PairCount, CentralizerSum, ClosedFormProduct };

std::string_view method_name(Method m);

/// Enumeration limits. These are configuration, not hard ceilings.
struct Budget {
  /// Coset representatives of L / Z(L) visited by the rank sum.
  std::uint64_t rank_sum = std::uint64_t{1} << 24;
  /// Ordered pairs visited by the pair count.
  std::uint64_t pair_count = std::uint64_t{1} << 20;
  /// Elements visited by the centralizer sum.
  std::uint64_t centralizer = std::uint64_t{1} << 20;
};

struct DegreeOptions {
  Budget budget;
  unsigned workers = 1;
};

/// d(L) together with what was learned computing it.
struct DegreeReport {
  Rational degree;
  std::string decimal;
  /// rank k -> number of x in L with rank(ad_x) = k. Sums to q^n.
  std::map<std::size_t, BigInt> rank_histogram;
  StructureReport dims;
  Method method = Method::RankSum;
};

/// d(L) = q^{-2n} sum_x q^{n - rank ad_x}, visiting one representative per
/// projective class of L / Z(L).
DegreeReport degree_rank_sum(const LieAlgebra &L, const DegreeOptions &opts = {});
/// Counts commuting ordered pairs by evaluating every bracket.
DegreeReport degree_pair_count(const LieAlgebra &L, const DegreeOptions &opts = {});
/// d(L) = q^{-2n} sum_x |C_L(x)|, one kernel per element.
DegreeReport degree_centralizer_sum(const LieAlgebra &L, const DegreeOptions &opts = {});
/// Product over stored direct summands when present, otherwise rank sum.
DegreeReport degree_auto(const LieAlgebra &L, const DegreeOptions &opts = {});

/// (q^{2m} + q - 1) / q^{2m+1}: d(L) for every L with dim L^2 = 1.
Rational formula_dim1(std::uint64_t q, std::uint64_t m);
/// dim L/Z(L) = 3: (2q^2 - 1)/q^4 when dim L^2 = 2, (q^3 + q^2 - 1)/q^5 when 3.
Rational formula_central3(std::uint64_t q, std::uint64_t derived_dim);
/// Nilpotency class 3 with dim L^2 = 2 and dim L = n:
/// (q^2 - q)/q^n + (q^2 + q - 1)/q^4 for even n, (q - 1)/q^n + (q^2 + q - 1)/q^4 for odd n.
Rational formula_class3(std::uint64_t q, std::uint64_t n);
/// First `count` terms of formula_dim1(q, m), m = 1, 2, ...
std::vector<Rational> sequence_dim1(std::uint64_t q, std::uint64_t count);

enum class FamilyKind { Heisenberg, HeisenbergPower, Class3Even, Class3Odd, ConstantAbelian };

struct FamilySpec {
  FamilyKind kind = FamilyKind::Heisenberg;
  std::uint64_t q = 2;
  /// Number of H(n) summands for HeisenbergPower.
  std::uint64_t k = 1;

  /// Names: heisenberg, heisenberg-power, class3-even, class3-odd, abelian.
  static FamilySpec parse(std::string_view name, std::uint64_t q, std::uint64_t k = 1);
};

struct AsymptoticReport {
  Rational limit;
  /// d(L_1), d(L_2), ... from the closed forms.
  std::vector<Rational> prefix;
};

AsymptoticReport asymptotic(const FamilySpec &family, std::size_t prefix_len = 5);

} // namespace commdeg

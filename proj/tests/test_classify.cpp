#include "commdeg/classify.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <algorithm>

using namespace commdeg;

namespace {

Rational R(std::int64_t n, std::int64_t d) { return Rational(n, d); }

using Spectrum = std::map<Rational, std::uint64_t>;

Vector vec(std::span<const Fq> s) { return Vector(s.begin(), s.end()); }

const TheoremCheck &find_check(const VerificationReport &rep, const std::string &tag) {
  const auto it = std::find_if(rep.checks.begin(), rep.checks.end(),
                               [&](const TheoremCheck &c) { return c.tag == tag; });
  REQUIRE(it != rep.checks.end());
  return *it;
}

} // namespace

TEST_CASE("recognize_dim1 examples") {
  const Field f2 = Field::make(2);
  CHECK(recognize_dim1(make_heisenberg(f2, 1)) ==
        Dim1Shape{Dim1Kind::HeisenbergPlusAbelian, 1, 0});
  CHECK(recognize_dim1(direct_sum(make_affine(f2), make_abelian(f2, 2))) ==
        Dim1Shape{Dim1Kind::AffinePlusAbelian, 0, 2});
  CHECK(recognize_dim1(direct_sum(make_heisenberg(f2, 2), make_abelian(f2, 1))) ==
        Dim1Shape{Dim1Kind::HeisenbergPlusAbelian, 2, 1});
  CHECK_THROWS_AS(recognize_dim1(make_abelian(f2, 3)), PreconditionViolated);
  CHECK_THROWS_AS(recognize_dim1(make_L43(f2)), PreconditionViolated);
}

TEST_CASE("recognize_dim1 round-trips constructors") {
  for (std::uint64_t q : {2, 3, 4}) {
    const Field f = Field::make(q);
    for (std::size_t m = 1; 2 * m + 1 <= 9; ++m)
      for (std::size_t k = 0; 2 * m + 1 + k <= 9; ++k)
        REQUIRE(recognize_dim1(direct_sum(make_heisenberg(f, m), make_abelian(f, k))) ==
                Dim1Shape{Dim1Kind::HeisenbergPlusAbelian, m, k});
    for (std::size_t k = 0; k <= 7; ++k)
      REQUIRE(recognize_dim1(direct_sum(make_affine(f), make_abelian(f, k))) ==
              Dim1Shape{Dim1Kind::AffinePlusAbelian, 0, k});
  }
}

TEST_CASE("recognize_dim1 does not depend on basis order") {
  // H(1) + A(1) with the abelian generator first and the center in the middle.
  const Field f3 = Field::make(3);
  const std::vector<Bracket> br{{1, 3, unit_vector(4, 2)}};
  const LieAlgebra L = LieAlgebra::from_brackets(f3, 4, br);
  CHECK(recognize_dim1(L) == Dim1Shape{Dim1Kind::HeisenbergPlusAbelian, 1, 1});
  // Affine-type, with [x, y] = x + y.
  const std::vector<Bracket> br2{{0, 1, {Field::one(), Field::one(), Fq{0}}}};
  const LieAlgebra M = LieAlgebra::from_brackets(f3, 3, br2);
  REQUIRE(is_lie(M));
  CHECK(recognize_dim1(M) == Dim1Shape{Dim1Kind::AffinePlusAbelian, 0, 1});
}

TEST_CASE("recognized shape predicts the degree") {
  for (const auto &L : enumerate_small(2, 3)) {
    if (derived_subalgebra(L).dim() != 1)
      continue;
    const Dim1Shape s = recognize_dim1(L);
    const std::size_t m = s.kind == Dim1Kind::HeisenbergPlusAbelian ? s.m : 1;
    REQUIRE(degree_rank_sum(L).degree == formula_dim1(2, m));
  }
}

TEST_CASE("verify_bounds on named algebras") {
  const Field f2 = Field::make(2);
  const std::vector<Bracket> cross{{0, 1, unit_vector(3, 2)},
                                   {0, 2, unit_vector(3, 1)},
                                   {1, 2, unit_vector(3, 0)}};
  const VerificationReport c = verify_bounds(LieAlgebra::from_brackets(f2, 3, cross));
  CHECK(c.passed());
  CHECK(c.degree == R(11, 32));
  CHECK(c.dims.dim_derived == 3);
  CHECK(find_check(c, "derived-ge-2-below-1/q").passed);
  CHECK(find_check(c, "central-quotient-3-values").passed);

  const VerificationReport h = verify_bounds(make_heisenberg(Field::make(3), 1));
  CHECK(h.passed());
  CHECK(h.degree == R(11, 27));
  CHECK(find_check(h, "derived-1-value").passed);
  CHECK(find_check(h, "above-1/q-iff-derived-1").passed);

  for (std::size_t n : {1, 2, 5}) {
    const VerificationReport a = verify_bounds(make_abelian(f2, n));
    CHECK(a.passed());
    CHECK(a.degree == R(1, 1));
  }

  const VerificationReport l55 = verify_bounds(make_L55(Field::make(3)));
  CHECK(l55.passed());
  CHECK(l55.degree == formula_central3(3, 3));
}

TEST_CASE("algebra_id is stable and distinguishes algebras") {
  const Field f2 = Field::make(2);
  CHECK(algebra_id(make_L43(f2)) == algebra_id(make_L43(f2)));
  CHECK(algebra_id(make_L43(f2)) != algebra_id(make_L43(Field::make(3))));
  CHECK(algebra_id(make_heisenberg(f2, 1)) != algebra_id(make_abelian(f2, 3)));
}

TEST_CASE("candidate indexing") {
  CHECK(candidate_count(2, 3) == 512);
  CHECK(candidate_count(2, 4) == std::uint64_t{1} << 24);
  CHECK(candidate_count(3, 3) == 19683);
  CHECK(candidate_count(2, 1) == 1);
  CHECK(candidate_count(5, 9) == UINT64_MAX);

  const Field f2 = Field::make(2);
  // Lowest digit is the last coordinate of [e2, e3].
  const LieAlgebra one = candidate_tensor(f2, 3, 1);
  CHECK(vec(one.structure(1, 2)) == unit_vector(3, 2));
  CHECK(is_zero(vec(one.structure(0, 1))));
  // Highest digit is the first coordinate of [e1, e2].
  const LieAlgebra top = candidate_tensor(f2, 3, 256);
  CHECK(vec(top.structure(0, 1)) == unit_vector(3, 0));
}

TEST_CASE("enumerate_small counts") {
  CHECK(enumerate_small(2, 0).size() == 1);
  CHECK(enumerate_small(2, 1).size() == 1);
  CHECK(enumerate_small(2, 2).size() == 4);
  CHECK(enumerate_small(2, 3).size() == 120);
  CHECK(enumerate_small(3, 2).size() == 9);
  CHECK_THROWS_AS(enumerate_small(2, 4, 1000), BudgetExceeded);
  for (const auto &L : enumerate_small(2, 3))
    REQUIRE(is_lie(L));
}

TEST_CASE("enumeration matches the independent Jacobi filter") {
  // The oracle decodes indices the same way and checks Jacobi on raw integers.
  std::uint64_t valid = 0;
  for (std::uint64_t idx = 0; idx < candidate_count(3, 2); ++idx)
    valid += oracle::is_lie(oracle::decode(3, 2, idx)) ? 1 : 0;
  CHECK(valid == 9);
  std::vector<std::uint64_t> seen;
  for_each_lie_tensor(Field::make(2), 3, 0, candidate_count(2, 3),
                      [&](std::uint64_t idx, const LieAlgebra &) { seen.push_back(idx); });
  std::vector<std::uint64_t> expected;
  for (std::uint64_t idx = 0; idx < candidate_count(2, 3); ++idx)
    if (oracle::is_lie(oracle::decode(2, 3, idx)))
      expected.push_back(idx);
  CHECK(seen == expected);
}

TEST_CASE("spectra of small enumerations") {
  const SpectrumReport s22 = spectrum(2, 2);
  CHECK(s22.valid == 4);
  CHECK(s22.values == Spectrum{{R(1, 1), 1}, {R(5, 8), 3}});
  CHECK(s22.violations.empty());

  const SpectrumReport s23 = spectrum(2, 3);
  CHECK(s23.candidates == 512);
  CHECK(s23.valid == 120);
  CHECK(s23.values ==
        Spectrum{{R(1, 1), 1}, {R(5, 8), 49}, {R(7, 16), 42}, {R(11, 32), 28}});
  CHECK(s23.violations.empty());

  const SpectrumReport s32 = spectrum(3, 2);
  CHECK(s32.valid == 9);
  CHECK(s32.values == Spectrum{{R(1, 1), 1}, {R(11, 27), 8}});

  const SpectrumReport s33 = spectrum(3, 3);
  CHECK(s33.valid == 1431);
  CHECK(s33.values == Spectrum{{R(1, 1), 1},
                               {R(11, 27), 338},
                               {R(17, 81), 624},
                               {R(35, 243), 468}});
  CHECK(s33.violations.empty());
}

TEST_CASE("spectrum values agree with the oracle") {
  // Every 50th valid algebra over F_3 in dimension 3.
  std::uint64_t count = 0;
  for_each_lie_tensor(Field::make(3), 3, 0, candidate_count(3, 3),
                      [&](std::uint64_t idx, const LieAlgebra &L) {
                        if (count++ % 50 != 0)
                          return;
                        const auto [num, den] = oracle::degree(oracle::decode(3, 3, idx));
                        REQUIRE(degree_rank_sum(L).degree == Rational(BigInt(num), BigInt(den)));
                      });
  CHECK(count == 1431);
}

TEST_CASE("verify_small passes and is worker independent") {
  EnumerationOptions one, many;
  many.degree.workers = 4;
  const VerificationSummary a = verify_small(2, 3, one), b = verify_small(2, 3, many);
  CHECK(a.passed());
  CHECK(a.derived_dims == std::map<std::size_t, std::uint64_t>{{0, 1}, {1, 49}, {2, 42}, {3, 28}});
  CHECK(a.checks_run == b.checks_run);
  CHECK(a.derived_dims == b.derived_dims);
  CHECK(a.spectrum.values == b.spectrum.values);
  CHECK(b.passed());

  const VerificationSummary c = verify_small(3, 2);
  CHECK(c.passed());
  CHECK(c.spectrum.valid == 9);

  EnumerationOptions tight;
  tight.budget = 100;
  CHECK_THROWS_AS(verify_small(2, 3, tight), BudgetExceeded);
}

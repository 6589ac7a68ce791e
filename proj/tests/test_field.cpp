#include "commdeg/error.hpp"
#include "commdeg/field.hpp"

#include <doctest.h>

#include <random>

using namespace commdeg;

TEST_CASE("prime field construction") {
  const Field f = Field::make(2);
  CHECK(f.p() == 2);
  CHECK(f.e() == 1);
  CHECK(f.q() == 2);
  CHECK(Field::make(7).modulus() == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("non prime powers are rejected") {
  CHECK_THROWS_AS(Field::make(6), NotPrimePower);
  CHECK_THROWS_AS(Field::make(12), NotPrimePower);
  CHECK_THROWS_AS(Field::make(1), NotPrimePower);
  CHECK_THROWS_AS(Field::make(0), NotPrimePower);
}

TEST_CASE("F_4 with modulus t^2 + t + 1") {
  const Field f = Field::make(4, std::vector<std::uint32_t>{1, 1, 1});
  const std::vector<std::uint32_t> t{0, 1}, t_plus_1{1, 1};
  CHECK(f.mul(f.from_coeffs(t), f.from_coeffs(t)) == f.from_coeffs(t_plus_1));
  CHECK(f.coeffs(f.mul(f.from_coeffs(t), f.from_coeffs(t))) == t_plus_1);
}

TEST_CASE("modulus errors") {
  // t^2 + 1 = (t + 1)^2 over F_2.
  CHECK_THROWS_AS(Field::make(4, std::vector<std::uint32_t>{1, 0, 1}), ReducibleModulus);
  CHECK_THROWS_AS(Field::make(4, std::vector<std::uint32_t>{1, 1}), InvalidParameter);
  CHECK_THROWS_AS(Field::make(4, std::vector<std::uint32_t>{1, 1, 2}), InvalidParameter);
  CHECK_THROWS_AS(Field::make(32), NoBuiltinModulus);
  CHECK_THROWS_AS(Field::make(49), NoBuiltinModulus);
  // t^2 + 1 is irreducible over F_7 since -1 is a non-residue mod 7.
  CHECK_NOTHROW(Field::make(49, std::vector<std::uint32_t>{1, 0, 1}));
}

TEST_CASE("inverse examples") {
  CHECK(Field::make(5).inv(Field::one()) == Field::one());
  CHECK(Field::make(16).inv(Field::one()) == Field::one());
  const Field f3 = Field::make(3);
  CHECK(f3.inv(f3.from_int(2)) == f3.from_int(2));
  const Field f7 = Field::make(7);
  CHECK(f7.inv(f7.from_int(3)) == f7.from_int(5));
  CHECK_THROWS_AS(f7.inv(Field::zero()), DivisionByZero);
}

TEST_CASE("from_int reduces into the prime subfield") {
  const Field f = Field::make(5);
  CHECK(f.from_int(-1) == f.from_int(4));
  CHECK(f.from_int(12) == f.from_int(2));
  CHECK_THROWS_AS(f.from_code(5), InvalidParameter);
}

namespace {

void check_axioms(const Field &f) {
  const std::uint32_t q = f.q();
  for (std::uint32_t a = 0; a < q; ++a) {
    const Fq x{a};
    REQUIRE(f.add(x, f.neg(x)) == Field::zero());
    REQUIRE(f.sub(x, x) == Field::zero());
    if (a != 0) {
      REQUIRE(f.mul(x, f.inv(x)) == Field::one());
      REQUIRE(f.pow(x, q - 1) == Field::one());
    }
    for (std::uint32_t b = 0; b < q; ++b) {
      const Fq y{b};
      REQUIRE(f.add(x, y) == f.add(y, x));
      REQUIRE(f.mul(x, y) == f.mul(y, x));
      for (std::uint32_t c = 0; c < q; ++c) {
        const Fq z{c};
        REQUIRE(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
        REQUIRE(f.mul(x, f.mul(y, z)) == f.mul(f.mul(x, y), z));
      }
    }
  }
}

} // namespace

TEST_CASE("field axioms hold exhaustively for q <= 27") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27}) {
    CAPTURE(q);
    check_axioms(Field::make(q));
  }
}

TEST_CASE("fields beyond the table limit") {
  // Find a monic irreducible cubic over F_7 for F_343.
  std::vector<std::uint32_t> cubic;
  for (std::uint32_t a = 0; a < 7 && cubic.empty(); ++a)
    for (std::uint32_t b = 0; b < 7 && cubic.empty(); ++b) {
      const std::vector<std::uint32_t> cand{a, b, 0, 1};
      if (field_detail::is_irreducible(cand, 7))
        cubic = cand;
    }
  REQUIRE(!cubic.empty());
  for (const Field &f : {Field::make(257), Field::make(343, cubic), Field::make(65537)}) {
    CAPTURE(f.q());
    std::mt19937_64 rng(f.q());
    std::uniform_int_distribution<std::uint32_t> pick(1, f.q() - 1);
    for (int t = 0; t < 500; ++t) {
      const Fq a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
      REQUIRE(f.mul(a, f.inv(a)) == Field::one());
      REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      REQUIRE(f.pow(a, f.q() - 1) == Field::one());
    }
  }
}

TEST_CASE("irreducibility test") {
  CHECK(field_detail::is_irreducible(std::vector<std::uint32_t>{1, 1, 1}, 2));
  CHECK_FALSE(field_detail::is_irreducible(std::vector<std::uint32_t>{1, 0, 1}, 2));
  CHECK(field_detail::is_irreducible(std::vector<std::uint32_t>{1, 1, 0, 0, 1}, 2));
  // t^4 + t^2 + 1 = (t^2 + t + 1)^2 over F_2: no roots, still reducible.
  CHECK_FALSE(field_detail::is_irreducible(std::vector<std::uint32_t>{1, 0, 1, 0, 1}, 2));
}

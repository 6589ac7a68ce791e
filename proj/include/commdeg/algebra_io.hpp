#pragma once

#include "commdeg/algebra.hpp"
#include "commdeg/degree.hpp"

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace commdeg {

// Algebra file grammar (one directive per line, '#' starts a comment):
//
//   field q=<int> [modulus=<c0,c1,...,ce>]
//   dim <n>
//   bracket <i> <j> -> <k1> ... <kn>      1 <= i < j <= n
//
// Omitted pairs are zero brackets. Coordinates are integers reduced mod p
// over a prime field; over F_{p^e} they are element codes in [0, q).

/// Parses without validating the Lie axioms. Throws ParseError.
LieAlgebra parse_algebra(std::istream &in);
LieAlgebra parse_algebra(std::string_view text);
LieAlgebra read_algebra_file(const std::string &path);

/// Canonical text: header, then nonzero brackets in (i, j) order.
std::string format_algebra(const LieAlgebra &L);
void write_algebra_file(const std::string &path, const LieAlgebra &L);

/// "dim L^2 = 1, dim Z = 1, class 2".
std::string format_structure(const StructureReport &s);

/// Human-readable block followed by '@'-prefixed machine lines.
std::string format_report(const LieAlgebra &L, const DegreeReport &rep);

/// Fields recovered from the machine lines of format_report.
struct ReportFields {
  std::uint64_t q = 0;
  std::size_t n = 0;
  std::size_t dim_derived = 0;
  std::size_t dim_center = 0;
  std::optional<std::size_t> nilpotency_class;
  Rational degree;
  std::string decimal;
  std::string method;
  std::map<std::size_t, BigInt> rank_histogram;
};

/// Reads the '@' lines of a report, ignoring everything else.
ReportFields parse_report(std::string_view text);

} // namespace commdeg

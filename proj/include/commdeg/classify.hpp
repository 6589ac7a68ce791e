#pragma once

#include "commdeg/algebra.hpp"
#include "commdeg/degree.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace commdeg {

enum class Dim1Kind { HeisenbergPlusAbelian, AffinePlusAbelian };

/// Isomorphism type of an algebra with one-dimensional derived subalgebra:
/// H(m) + A(abelian_dim) or <x, y | [x, y] = x> + A(abelian_dim).
struct Dim1Shape {
  Dim1Kind kind = Dim1Kind::HeisenbergPlusAbelian;
  std::size_t m = 0;
  std::size_t abelian_dim = 0;

  friend bool operator==(const Dim1Shape &, const Dim1Shape &) = default;
};

/// Decides the shape from L^2 ⊆ Z(L) and dimensions alone. Throws
/// PreconditionViolated unless dim L^2 = 1.
Dim1Shape recognize_dim1(const LieAlgebra &L);

struct TheoremCheck {
  std::string tag;
  bool passed = true;
  std::string witness;
};

struct VerificationReport {
  std::string id;
  StructureReport dims;
  Rational degree;
  std::vector<TheoremCheck> checks;

  bool passed() const;
};

/// Short stable fingerprint of (q, n, tensor).
std::string algebra_id(const LieAlgebra &L);

/// Degree used by the verification drivers: pair count for n <= 2, rank
/// sum otherwise.
DegreeReport verification_degree(const LieAlgebra &L, const DegreeOptions &opts = {});

/// Instantiates the bound, gap and value-set theorems on one algebra.
/// Tags: derived-ge-2-below-1/q, above-1/q-iff-derived-1, never-1/q,
/// central-quotient-3-values, derived-1-value, gap-below-1.
VerificationReport verify_bounds(const LieAlgebra &L, const DegreeOptions &opts = {},
                                 std::string id = {});

constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 25;

/// q^(n * C(n, 2)), saturating.
std::uint64_t candidate_count(std::uint64_t q, std::size_t n);

/// The candidate tensor with the given index: upper-triangle coefficients
/// of (1,2), (1,3), ..., (n-1,n) concatenated, read as base-q digits, most
/// significant first.
LieAlgebra candidate_tensor(const Field &field, std::size_t n, std::uint64_t index);

/// Calls visit(index, L) for every Jacobi-valid candidate with index in
/// [begin, end), in increasing index order.
void for_each_lie_tensor(const Field &field, std::size_t n, std::uint64_t begin,
                         std::uint64_t end,
                         const std::function<void(std::uint64_t, const LieAlgebra &)> &visit);

/// Every Lie algebra structure on F_q^n, in candidate order. Throws
/// BudgetExceeded when the candidate count exceeds the budget.
std::vector<LieAlgebra> enumerate_small(std::uint64_t q, std::size_t n,
                                        std::uint64_t budget = kDefaultEnumerationBudget);

struct SpectrumReport {
  std::uint64_t candidates = 0;
  std::uint64_t valid = 0;
  std::map<Rational, std::uint64_t> values;
  /// Value-set assertions that failed, one line each.
  std::vector<std::string> violations;
};

struct EnumerationOptions {
  std::uint64_t budget = kDefaultEnumerationBudget;
  DegreeOptions degree;
  /// Called with the number of candidates processed so far, roughly every
  /// 2^20 candidates. May be invoked from worker threads (serialized).
  std::function<void(std::uint64_t)> progress;
};

/// Multiset of d(L) over all enumerated algebras, with the value-set checks:
/// nothing in ((q^2+q-1)/q^3, 1), nothing equal to 1/q, and everything in
/// (1/q, (q^2+q-1)/q^3] a term of the dim L^2 = 1 sequence.
SpectrumReport spectrum(std::uint64_t q, std::size_t n, const EnumerationOptions &opts = {});

struct VerificationFailure {
  std::uint64_t index = 0;
  LieAlgebra algebra;
  VerificationReport report;
};

struct VerificationSummary {
  SpectrumReport spectrum;
  /// dim L^2 -> number of enumerated algebras.
  std::map<std::size_t, std::uint64_t> derived_dims;
  std::uint64_t checks_run = 0;
  /// Lowest-index failures, at most kMaxFailures.
  std::vector<VerificationFailure> failures;
  static constexpr std::size_t kMaxFailures = 8;

  bool passed() const { return failures.empty() && spectrum.violations.empty(); }
};

/// Runs verify_bounds on every enumerated algebra and builds the spectrum.
/// Results do not depend on the worker count.
VerificationSummary verify_small(std::uint64_t q, std::size_t n,
                                 const EnumerationOptions &opts = {});

} // namespace commdeg

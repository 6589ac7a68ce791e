#include "commdeg/classify.hpp"

#include "commdeg/parallel.hpp"

#include <atomic>
#include <cstdio>
#include <limits>
#include <mutex>
#include <sstream>

namespace commdeg {

Dim1Shape recognize_dim1(const LieAlgebra &L) {
  const Subspace derived = derived_subalgebra(L);
  if (derived.dim() != 1)
    throw PreconditionViolated("recognize_dim1 needs dim L^2 = 1, got " +
                               std::to_string(derived.dim()));
  const Subspace Z = center(L);
  const std::size_t n = L.dim();
  Dim1Shape shape;
  if (Z.contains(derived)) {
    // Class two: L / Z(L) carries a nondegenerate alternating form.
    if ((n - Z.dim()) % 2 != 0)
      throw PreconditionViolated("odd dim L/Z(L) with L^2 central; not a Lie algebra");
    shape.kind = Dim1Kind::HeisenbergPlusAbelian;
    shape.m = (n - Z.dim()) / 2;
    shape.abelian_dim = Z.dim() - 1;
  } else {
    shape.kind = Dim1Kind::AffinePlusAbelian;
    shape.m = 0;
    shape.abelian_dim = n - 2;
  }
  return shape;
}

bool VerificationReport::passed() const {
  for (const auto &c : checks)
    if (!c.passed)
      return false;
  return true;
}

std::string algebra_id(const LieAlgebra &L) {
  // FNV-1a over q, n and the tensor codes.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(L.field().q());
  mix(L.dim());
  for (auto x : L.tensor())
    mix(x.v);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

DegreeReport verification_degree(const LieAlgebra &L, const DegreeOptions &opts) {
  return L.dim() <= 2 ? degree_pair_count(L, opts) : degree_rank_sum(L, opts);
}

VerificationReport verify_bounds(const LieAlgebra &L, const DegreeOptions &opts,
                                 std::string id) {
  const std::uint64_t q = L.field().q();
  const DegreeReport deg = verification_degree(L, opts);
  const Rational d = deg.degree;
  const Rational inv_q(1, q);
  const Rational top = formula_dim1(q, 1);
  const std::size_t derived = deg.dims.dim_derived;
  const std::size_t quotient = L.dim() - deg.dims.dim_center;

  VerificationReport rep;
  rep.id = id.empty() ? algebra_id(L) : std::move(id);
  rep.dims = deg.dims;
  rep.degree = d;
  auto add = [&rep](std::string tag, bool ok, std::string witness) {
    rep.checks.push_back({std::move(tag), ok, std::move(witness)});
  };
  const std::string dtext = "d = " + d.str() + ", dim L^2 = " + std::to_string(derived);

  add("derived-ge-2-below-1/q", derived < 2 || d < inv_q, dtext);

  {
    // The theorems concern non-abelian L; abelian L has d = 1 and L^2 = 0.
    bool ok = derived == 0 || (d > inv_q) == (derived == 1);
    std::string witness = dtext;
    if (ok && derived == 1) {
      try {
        recognize_dim1(L);
      } catch (const Error &e) {
        ok = false;
        witness += ", recognizer: " + std::string(e.what());
      }
    }
    add("above-1/q-iff-derived-1", ok, witness);
  }

  add("never-1/q", d != inv_q, dtext);

  if (quotient == 3) {
    const Rational a = formula_central3(q, 2), b = formula_central3(q, 3);
    add("central-quotient-3-values", d == a || d == b,
        dtext + ", expected " + a.str() + " or " + b.str());
  }

  if (derived == 1) {
    std::string witness = dtext;
    bool ok = false;
    try {
      const Dim1Shape shape = recognize_dim1(L);
      const std::size_t m = shape.kind == Dim1Kind::HeisenbergPlusAbelian ? shape.m : 1;
      const Rational expected = formula_dim1(q, m);
      ok = d == expected;
      witness += ", expected " + expected.str() + " (m = " + std::to_string(m) + ")";
    } catch (const Error &e) {
      witness += ", recognizer: " + std::string(e.what());
    }
    add("derived-1-value", ok, witness);
  }

  add("gap-below-1", !(d > top && d < Rational(1)),
      dtext + ", gap (" + top.str() + ", 1)");
  return rep;
}

std::uint64_t candidate_count(std::uint64_t q, std::size_t n) {
  const std::uint64_t digits = n * (n - (n > 0)) / 2 * n;
  std::uint64_t out = 1;
  for (std::uint64_t k = 0; k < digits; ++k) {
    if (out > std::numeric_limits<std::uint64_t>::max() / q)
      return std::numeric_limits<std::uint64_t>::max();
    out *= q;
  }
  return out;
}

namespace {

struct PairIndex {
  std::size_t i, j;
};

std::vector<PairIndex> upper_pairs(std::size_t n) {
  std::vector<PairIndex> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      out.push_back({i, j});
  return out;
}

void fill_tensor(const Field &f, std::size_t n, const std::vector<PairIndex> &pairs,
                 std::uint64_t index, std::vector<Fq> &c) {
  const std::uint64_t q = f.q();
  // Least significant digit is the last coordinate of the last pair.
  for (std::size_t t = pairs.size(); t-- > 0;) {
    const auto [i, j] = pairs[t];
    for (std::size_t k = n; k-- > 0;) {
      const Fq v{static_cast<std::uint32_t>(index % q)};
      index /= q;
      c[(i * n + j) * n + k] = v;
      c[(j * n + i) * n + k] = f.neg(v);
    }
  }
}

// Jacobi on an alternating tensor held as a flat array.
bool jacobi_holds(const Field &f, std::size_t n, const std::vector<Fq> &c,
                  std::vector<Fq> &r) {
  auto accumulate = [&](std::size_t a, std::size_t b, std::size_t d) {
    const Fq *inner = c.data() + (a * n + b) * n;
    for (std::size_t l = 0; l < n; ++l) {
      if (inner[l].is_zero())
        continue;
      const Fq *outer = c.data() + (l * n + d) * n;
      for (std::size_t k = 0; k < n; ++k)
        r[k] = f.add(r[k], f.mul(inner[l], outer[k]));
    }
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        std::fill(r.begin(), r.end(), Field::zero());
        accumulate(i, j, k);
        accumulate(j, k, i);
        accumulate(k, i, j);
        for (auto v : r)
          if (!v.is_zero())
            return false;
      }
  return true;
}

void check_budget(std::uint64_t q, std::size_t n, std::uint64_t budget) {
  const std::uint64_t count = candidate_count(q, n);
  if (count > budget)
    throw BudgetExceeded("candidate structure tensors", count, budget);
}

// Serialized progress reporting shared by the workers of one run.
class Progress {
public:
  explicit Progress(const std::function<void(std::uint64_t)> &cb) : cb_(cb) {}
  void advance(std::uint64_t step) {
    if (!cb_)
      return;
    const std::uint64_t before = done_.fetch_add(step);
    const std::uint64_t after = before + step;
    if ((before >> 20) != (after >> 20)) {
      std::lock_guard lock(mu_);
      cb_(after);
    }
  }

private:
  const std::function<void(std::uint64_t)> &cb_;
  std::atomic<std::uint64_t> done_{0};
  std::mutex mu_;
};

// Visits the valid tensors of [begin, end), reporting progress in slices.
template <class Visit>
void scan_range(const Field &field, std::size_t n, std::uint64_t begin, std::uint64_t end,
                Progress &progress, Visit &&visit) {
  constexpr std::uint64_t kSlice = std::uint64_t{1} << 16;
  for (std::uint64_t lo = begin; lo < end; lo += kSlice) {
    const std::uint64_t hi = std::min(end, lo + kSlice);
    for_each_lie_tensor(field, n, lo, hi, visit);
    progress.advance(hi - lo);
  }
}

void check_value_set(std::uint64_t q, std::size_t n, SpectrumReport &rep) {
  const Rational inv_q(1, q);
  const Rational top = formula_dim1(q, 1);
  for (const auto &[d, count] : rep.values) {
    if (d > top && d < Rational(1))
      rep.violations.push_back("value " + d.str() + " lies in (" + top.str() + ", 1)");
    if (d == inv_q)
      rep.violations.push_back("value " + d.str() + " equals 1/q");
    if (d > inv_q && d <= top) {
      bool found = false;
      for (std::size_t m = 1; m <= std::max<std::size_t>(1, n / 2); ++m)
        found = found || d == formula_dim1(q, m);
      if (!found)
        rep.violations.push_back("value " + d.str() +
                                 " above 1/q is not a term (q^2m+q-1)/q^(2m+1)");
    }
  }
}

} // namespace

LieAlgebra candidate_tensor(const Field &field, std::size_t n, std::uint64_t index) {
  std::vector<Fq> c(n * n * n);
  fill_tensor(field, n, upper_pairs(n), index, c);
  return LieAlgebra::from_tensor(field, n, std::move(c));
}

void for_each_lie_tensor(const Field &field, std::size_t n, std::uint64_t begin,
                         std::uint64_t end,
                         const std::function<void(std::uint64_t, const LieAlgebra &)> &visit) {
  const auto pairs = upper_pairs(n);
  std::vector<Fq> c(n * n * n), r(n);
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    fill_tensor(field, n, pairs, idx, c);
    if (!jacobi_holds(field, n, c, r))
      continue;
    visit(idx, LieAlgebra::from_tensor(field, n, c));
  }
}

std::vector<LieAlgebra> enumerate_small(std::uint64_t q, std::size_t n,
                                        std::uint64_t budget) {
  check_budget(q, n, budget);
  const Field field = Field::make(q);
  std::vector<LieAlgebra> out;
  for_each_lie_tensor(field, n, 0, candidate_count(q, n),
                      [&out](std::uint64_t, const LieAlgebra &L) { out.push_back(L); });
  return out;
}

SpectrumReport spectrum(std::uint64_t q, std::size_t n, const EnumerationOptions &opts) {
  check_budget(q, n, opts.budget);
  const Field field = Field::make(q);
  const std::uint64_t total = candidate_count(q, n);
  Progress progress(opts.progress);

  DegreeOptions inner = opts.degree;
  inner.workers = 1;
  auto body = [&](std::uint64_t begin, std::uint64_t end) {
    SpectrumReport part;
    scan_range(field, n, begin, end, progress, [&](std::uint64_t, const LieAlgebra &L) {
      ++part.valid;
      ++part.values[verification_degree(L, inner).degree];
    });
    return part;
  };
  SpectrumReport rep;
  rep.candidates = total;
  for (const auto &part : run_partitioned(total, opts.degree.workers, body)) {
    rep.valid += part.valid;
    for (const auto &[d, count] : part.values)
      rep.values[d] += count;
  }
  check_value_set(q, n, rep);
  return rep;
}

VerificationSummary verify_small(std::uint64_t q, std::size_t n,
                                 const EnumerationOptions &opts) {
  check_budget(q, n, opts.budget);
  const Field field = Field::make(q);
  const std::uint64_t total = candidate_count(q, n);
  Progress progress(opts.progress);

  DegreeOptions inner = opts.degree;
  inner.workers = 1;
  auto body = [&](std::uint64_t begin, std::uint64_t end) {
    VerificationSummary part;
    scan_range(field, n, begin, end, progress, [&](std::uint64_t idx, const LieAlgebra &L) {
      VerificationReport rep = verify_bounds(L, inner, "candidate-" + std::to_string(idx));
      ++part.spectrum.valid;
      ++part.spectrum.values[rep.degree];
      ++part.derived_dims[rep.dims.dim_derived];
      part.checks_run += rep.checks.size();
      if (!rep.passed() && part.failures.size() < VerificationSummary::kMaxFailures)
        part.failures.push_back({idx, L, std::move(rep)});
    });
    return part;
  };

  VerificationSummary out;
  out.spectrum.candidates = total;
  for (auto &part : run_partitioned(total, opts.degree.workers, body)) {
    out.spectrum.valid += part.spectrum.valid;
    for (const auto &[d, count] : part.spectrum.values)
      out.spectrum.values[d] += count;
    for (const auto &[k, count] : part.derived_dims)
      out.derived_dims[k] += count;
    out.checks_run += part.checks_run;
    for (auto &f : part.failures)
      if (out.failures.size() < VerificationSummary::kMaxFailures)
        out.failures.push_back(std::move(f));
  }
  check_value_set(q, n, out.spectrum);
  return out;
}

} // namespace commdeg

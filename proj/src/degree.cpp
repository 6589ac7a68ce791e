#include "commdeg/degree.hpp"

#include "commdeg/parallel.hpp"

#include <limits>
#include <stdexcept>

namespace commdeg {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

// q^e, saturating at 2^64 - 1.
std::uint64_t count_pow(std::uint64_t q, std::uint64_t e) {
  std::uint64_t out = 1;
  for (std::uint64_t k = 0; k < e; ++k) {
    if (out > kSaturated / q)
      return kSaturated;
    out *= q;
  }
  return out;
}

// Digits of idx in base q, most significant first, into out[0..len).
void decode(std::uint64_t idx, std::uint64_t q, std::size_t len, Fq *out) {
  for (std::size_t k = len; k-- > 0;) {
    out[k] = Fq{static_cast<std::uint32_t>(idx % q)};
    idx /= q;
  }
}

DegreeReport finish(const LieAlgebra &L, Method method,
                    std::map<std::size_t, BigInt> histogram) {
  const std::uint64_t q = L.field().q();
  const std::size_t n = L.dim();
  BigInt total = 0;
  for (const auto &[k, count] : histogram)
    total += count * ipow(q, n - k);
  DegreeReport rep;
  rep.degree = Rational(total, ipow(q, 2 * n));
  rep.decimal = rep.degree.decimal(6);
  rep.rank_histogram = std::move(histogram);
  rep.dims = structure_report(L);
  rep.method = method;
  return rep;
}

std::map<std::size_t, BigInt> merge_counts(const std::vector<std::vector<std::uint64_t>> &parts,
                                           const BigInt &weight) {
  std::map<std::size_t, BigInt> out;
  for (const auto &part : parts)
    for (std::size_t k = 0; k < part.size(); ++k)
      if (part[k] != 0)
        out[k] += BigInt(part[k]) * weight;
  return out;
}

} // namespace

std::string_view method_name(Method m) {
  switch (m) {
  case Method::RankSum:
    return "rank-sum";
  case Method::PairCount:
    return "pair-count";
  case Method::CentralizerSum:
    return "centralizer-sum";
  case Method::ClosedFormProduct:
    return "closed-form-product";
  }
  return "unknown";
}

DegreeReport degree_rank_sum(const LieAlgebra &L, const DegreeOptions &opts) {
  const Field &f = L.field();
  const std::uint64_t q = f.q();
  const std::size_t n = L.dim();
  const Subspace Z = center(L);

  // Coordinates outside the center's pivot columns span a complement of Z(L).
  std::vector<bool> pivot(n, false);
  for (auto c : Z.pivots())
    pivot[c] = true;
  std::vector<std::size_t> comp;
  for (std::size_t c = 0; c < n; ++c)
    if (!pivot[c])
      comp.push_back(c);
  const std::size_t r = comp.size();

  const std::uint64_t reps = count_pow(q, r);
  if (reps > opts.budget.rank_sum)
    throw BudgetExceeded("rank-sum representatives", reps, opts.budget.rank_sum);
  const std::uint64_t projective = (reps - 1) / (q - 1);

  // ad_{e_c} for complement coordinates, row-major n x n.
  std::vector<std::vector<Fq>> ad(r);
  for (std::size_t t = 0; t < r; ++t) {
    const Matrix m = ad_matrix(L, unit_vector(n, comp[t]));
    ad[t].resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        ad[t][a * n + b] = m(a, b);
  }

  auto body = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<std::uint64_t> hist(n + 1, 0);
    std::vector<Fq> coords(r), work(n * n);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      // Projective classes ordered by position of the leading 1; block t
      // holds q^{r-1-t} tails.
      std::uint64_t rest = idx;
      std::size_t lead = 0;
      for (;; ++lead) {
        const std::uint64_t block = count_pow(q, r - 1 - lead);
        if (rest < block)
          break;
        rest -= block;
      }
      std::fill(coords.begin(), coords.end(), Field::zero());
      coords[lead] = Field::one();
      decode(rest, q, r - 1 - lead, coords.data() + lead + 1);

      std::fill(work.begin(), work.end(), Field::zero());
      for (std::size_t t = lead; t < r; ++t) {
        if (coords[t].is_zero())
          continue;
        const auto &m = ad[t];
        for (std::size_t k = 0; k < n * n; ++k)
          work[k] = f.add(work[k], f.mul(coords[t], m[k]));
      }
      ++hist[linalg_detail::rank_in_place(f, work.data(), n, n)];
    }
    return hist;
  };
  const auto parts = run_partitioned(projective, opts.workers, body);

  const BigInt center_size = ipow(q, Z.dim());
  auto histogram = merge_counts(parts, BigInt(q - 1) * center_size);
  histogram[0] += center_size;
  return finish(L, Method::RankSum, std::move(histogram));
}

DegreeReport degree_pair_count(const LieAlgebra &L, const DegreeOptions &opts) {
  const Field &f = L.field();
  const std::uint64_t q = f.q();
  const std::size_t n = L.dim();
  const std::uint64_t pairs = count_pow(q, 2 * n);
  if (pairs > opts.budget.pair_count)
    throw BudgetExceeded("pair-count pairs", pairs, opts.budget.pair_count);
  const std::uint64_t size = count_pow(q, n);

  std::vector<Fq> elems(size * n);
  for (std::uint64_t idx = 0; idx < size; ++idx)
    decode(idx, q, n, elems.data() + idx * n);
  const auto &c = L.tensor();

  auto body = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<std::uint64_t> hist(n + 1, 0);
    std::vector<Fq> out(n);
    for (std::uint64_t xi = begin; xi < end; ++xi) {
      const Fq *x = elems.data() + xi * n;
      std::uint64_t commuting = 0;
      for (std::uint64_t yi = 0; yi < size; ++yi) {
        const Fq *y = elems.data() + yi * n;
        std::fill(out.begin(), out.end(), Field::zero());
        for (std::size_t i = 0; i < n; ++i) {
          if (x[i].is_zero())
            continue;
          for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero())
              continue;
            const Fq s = f.mul(x[i], y[j]);
            const Fq *cij = c.data() + (i * n + j) * n;
            for (std::size_t k = 0; k < n; ++k)
              out[k] = f.add(out[k], f.mul(s, cij[k]));
          }
        }
        bool zero = true;
        for (auto v : out)
          zero = zero && v.is_zero();
        commuting += zero;
      }
      // |C_L(x)| = q^{n - rank ad_x}.
      std::size_t dim_c = 0;
      while (commuting % q == 0 && commuting > 1) {
        commuting /= q;
        ++dim_c;
      }
      if (commuting != 1)
        throw std::logic_error("centralizer size is not a power of q");
      ++hist[n - dim_c];
    }
    return hist;
  };
  const auto parts = run_partitioned(size, opts.workers, body);
  return finish(L, Method::PairCount, merge_counts(parts, BigInt(1)));
}

DegreeReport degree_centralizer_sum(const LieAlgebra &L, const DegreeOptions &opts) {
  const std::uint64_t q = L.field().q();
  const std::size_t n = L.dim();
  const std::uint64_t size = count_pow(q, n);
  if (size > opts.budget.centralizer)
    throw BudgetExceeded("centralizer-sum elements", size, opts.budget.centralizer);

  auto body = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<std::uint64_t> hist(n + 1, 0);
    Vector x(n);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      decode(idx, q, n, x.data());
      ++hist[n - centralizer(L, x).dim()];
    }
    return hist;
  };
  const auto parts = run_partitioned(size, opts.workers, body);
  return finish(L, Method::CentralizerSum, merge_counts(parts, BigInt(1)));
}

DegreeReport degree_auto(const LieAlgebra &L, const DegreeOptions &opts) {
  if (L.summands().empty())
    return degree_rank_sum(L, opts);

  // rank(ad_{x1 + x2}) = rank(ad_{x1}) + rank(ad_{x2}) across a direct sum,
  // so histograms convolve and degrees multiply.
  std::map<std::size_t, BigInt> histogram{{0, 1}};
  for (const auto &part : L.summands()) {
    const DegreeReport sub = degree_auto(part, opts);
    std::map<std::size_t, BigInt> next;
    for (const auto &[ka, ca] : histogram)
      for (const auto &[kb, cb] : sub.rank_histogram)
        next[ka + kb] += ca * cb;
    histogram = std::move(next);
  }
  return finish(L, Method::ClosedFormProduct, std::move(histogram));
}

} // namespace commdeg

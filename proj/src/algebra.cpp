#include "commdeg/algebra.hpp"

#include <algorithm>

namespace commdeg {

namespace {

std::string residual_text(const Vector &r) {
  std::string s = "(";
  for (std::size_t k = 0; k < r.size(); ++k)
    s += (k ? " " : "") + std::to_string(r[k].v);
  return s + ")";
}

// [[e_a, e_b], e_c] accumulated into out.
void add_double_bracket(const LieAlgebra &L, std::size_t a, std::size_t b,
                        std::size_t c, Vector &out) {
  const Field &f = L.field();
  const auto inner = L.structure(a, b);
  for (std::size_t l = 0; l < L.dim(); ++l) {
    if (inner[l].is_zero())
      continue;
    const auto outer = L.structure(l, c);
    for (std::size_t k = 0; k < L.dim(); ++k)
      out[k] = f.add(out[k], f.mul(inner[l], outer[k]));
  }
}

std::vector<std::string> default_labels(const std::string &stem, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t k = 1; k <= n; ++k)
    out.push_back(stem + std::to_string(k));
  return out;
}

LieAlgebra checked(LieAlgebra L) {
  validate(L);
  return L;
}

} // namespace

JacobiFails::JacobiFails(std::size_t i, std::size_t j, std::size_t k, Vector residual)
    : InvalidAlgebra("Jacobi identity fails on (" + std::to_string(i + 1) + ", " +
                     std::to_string(j + 1) + ", " + std::to_string(k + 1) +
                     "), residual " + residual_text(residual)),
      i_(i), j_(j), k_(k), residual_(std::move(residual)) {}

LieAlgebra LieAlgebra::from_brackets(Field field, std::size_t n,
                                     std::span<const Bracket> brackets,
                                     std::vector<std::string> labels) {
  std::vector<Fq> c(n * n * n);
  for (const auto &b : brackets) {
    if (b.i >= b.j || b.j >= n)
      throw InvalidParameter("bracket indices must satisfy i < j <= n");
    if (b.value.size() != n)
      throw DimensionMismatch(n, b.value.size());
    for (std::size_t k = 0; k < n; ++k) {
      c[(b.i * n + b.j) * n + k] = b.value[k];
      c[(b.j * n + b.i) * n + k] = field.neg(b.value[k]);
    }
  }
  return from_tensor(std::move(field), n, std::move(c), std::move(labels));
}

LieAlgebra LieAlgebra::from_tensor(Field field, std::size_t n, std::vector<Fq> tensor,
                                   std::vector<std::string> labels) {
  if (tensor.size() != n * n * n)
    throw DimensionMismatch(n * n * n, tensor.size());
  if (!labels.empty() && labels.size() != n)
    throw DimensionMismatch(n, labels.size());
  for (auto x : tensor)
    if (x.v >= field.q())
      throw InvalidParameter("tensor entry outside the field");
  return LieAlgebra(std::move(field), n, std::move(tensor), std::move(labels));
}

namespace {

// First violation, if any: throws when `raise` is set, else returns false.
bool check_lie(const LieAlgebra &L, bool raise) {
  const Field &f = L.field();
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const auto a = L.structure(i, j), b = L.structure(j, i);
      for (std::size_t k = 0; k < n; ++k) {
        const bool bad = i == j ? !a[k].is_zero() : a[k] != f.neg(b[k]);
        if (bad) {
          if (raise)
            throw NotAlternating(i, j);
          return false;
        }
      }
    }
  }
  Vector r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        std::fill(r.begin(), r.end(), Field::zero());
        add_double_bracket(L, i, j, k, r);
        add_double_bracket(L, j, k, i, r);
        add_double_bracket(L, k, i, j, r);
        if (!is_zero(r)) {
          if (raise)
            throw JacobiFails(i, j, k, r);
          return false;
        }
      }
  return true;
}

} // namespace

bool is_lie(const LieAlgebra &L) { return check_lie(L, false); }

StructureReport structure_report(const LieAlgebra &L) {
  StructureReport rep;
  rep.dim_derived = derived_subalgebra(L).dim();
  rep.dim_center = center(L).dim();
  rep.nilpotency_class = nilpotency_class(L);
  rep.is_abelian = rep.dim_derived == 0;
  return rep;
}

StructureReport validate(const LieAlgebra &L) {
  check_lie(L, true);
  return structure_report(L);
}

Vector bracket(const LieAlgebra &L, const Vector &x, const Vector &y) {
  const std::size_t n = L.dim();
  if (x.size() != n)
    throw DimensionMismatch(n, x.size());
  if (y.size() != n)
    throw DimensionMismatch(n, y.size());
  const Field &f = L.field();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero())
      continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero())
        continue;
      const Fq s = f.mul(x[i], y[j]);
      const auto c = L.structure(i, j);
      for (std::size_t k = 0; k < n; ++k)
        out[k] = f.add(out[k], f.mul(s, c[k]));
    }
  }
  return out;
}

Matrix ad_matrix(const LieAlgebra &L, const Vector &x) {
  const std::size_t n = L.dim();
  if (x.size() != n)
    throw DimensionMismatch(n, x.size());
  const Field &f = L.field();
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero())
      continue;
    for (std::size_t j = 0; j < n; ++j) {
      const auto c = L.structure(i, j);
      for (std::size_t k = 0; k < n; ++k)
        m(k, j) = f.add(m(k, j), f.mul(x[i], c[k]));
    }
  }
  return m;
}

Subspace centralizer(const LieAlgebra &L, const Vector &x) {
  return kernel(ad_matrix(L, x));
}

Subspace center(const LieAlgebra &L) {
  const std::size_t n = L.dim();
  // Stack ad_{e_i} for every basis vector; the center is the common kernel.
  Matrix stacked(L.field(), n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto c = L.structure(i, j);
      for (std::size_t r = 0; r < n; ++r)
        stacked(i * n + r, j) = c[r];
    }
  return kernel(stacked);
}

Subspace derived_subalgebra(const LieAlgebra &L) {
  const std::size_t n = L.dim();
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto c = L.structure(i, j);
      gens.emplace_back(c.begin(), c.end());
    }
  return span(L.field(), gens, n);
}

std::vector<Subspace> lower_central_series(const LieAlgebra &L) {
  const std::size_t n = L.dim();
  std::vector<Subspace> series{Subspace::full(L.field(), n)};
  while (series.back().dim() != 0) {
    std::vector<Vector> gens;
    for (const auto &b : series.back().basis_vectors())
      for (std::size_t i = 0; i < n; ++i)
        gens.push_back(bracket(L, unit_vector(n, i), b));
    Subspace next = span(L.field(), gens, n);
    if (next == series.back())
      break;
    series.push_back(std::move(next));
  }
  return series;
}

std::optional<std::size_t> nilpotency_class(const LieAlgebra &L) {
  const auto series = lower_central_series(L);
  if (series.back().dim() != 0)
    return std::nullopt;
  // series = L^1, ..., L^{c+1} = 0, except for the zero algebra where L^1 = 0.
  return series.size() == 1 ? 1 : series.size() - 1;
}

LieAlgebra make_abelian(const Field &field, std::size_t n) {
  return checked(LieAlgebra::from_brackets(field, n, {}, default_labels("e", n)));
}

LieAlgebra make_heisenberg(const Field &field, std::size_t m) {
  if (m < 1)
    throw InvalidParameter("Heisenberg parameter m must be >= 1");
  const std::size_t n = 2 * m + 1;
  std::vector<Bracket> br;
  for (std::size_t i = 0; i < m; ++i)
    br.push_back({i, m + i, unit_vector(n, n - 1)});
  auto labels = default_labels("x", m);
  for (auto &y : default_labels("y", m))
    labels.push_back(std::move(y));
  labels.push_back("z");
  return checked(LieAlgebra::from_brackets(field, n, br, std::move(labels)));
}

LieAlgebra make_affine(const Field &field) {
  const std::vector<Bracket> br{{0, 1, unit_vector(2, 0)}};
  return checked(LieAlgebra::from_brackets(field, 2, br, {"x", "y"}));
}

LieAlgebra make_L43(const Field &field) {
  const std::vector<Bracket> br{{0, 1, unit_vector(4, 2)}, {0, 2, unit_vector(4, 3)}};
  return checked(LieAlgebra::from_brackets(field, 4, br, {"a1", "a2", "a3", "z"}));
}

LieAlgebra make_L55(const Field &field) {
  const std::vector<Bracket> br{{0, 1, unit_vector(5, 2)},
                                {0, 2, unit_vector(5, 4)},
                                {1, 3, unit_vector(5, 4)}};
  return checked(
      LieAlgebra::from_brackets(field, 5, br, {"a1", "a2", "a3", "a4", "z"}));
}

LieAlgebra direct_sum(const LieAlgebra &a, const LieAlgebra &b) {
  if (!(a.field() == b.field()))
    throw FieldMismatch();
  const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
  std::vector<Fq> c(n * n * n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      std::copy_n(a.structure(i, j).begin(), na, c.begin() + (i * n + j) * n);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      std::copy_n(b.structure(i, j).begin(), nb,
                  c.begin() + ((na + i) * n + (na + j)) * n + na);

  std::vector<std::string> labels;
  if (!a.labels().empty() && !b.labels().empty()) {
    labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  }
  LieAlgebra out(a.field(), n, std::move(c), std::move(labels));
  for (const LieAlgebra *part : {&a, &b}) {
    if (part->summands().empty())
      out.summands_.push_back(*part);
    else
      out.summands_.insert(out.summands_.end(), part->summands().begin(),
                           part->summands().end());
  }
  validate(out);
  return out;
}

LieAlgebra central_product(const LieAlgebra &a, std::size_t z1, const LieAlgebra &b,
                           std::size_t z2) {
  if (!(a.field() == b.field()))
    throw FieldMismatch();
  if (z1 >= a.dim() || z2 >= b.dim())
    throw InvalidParameter("central element index out of range");
  if (!center(a).contains(unit_vector(a.dim(), z1)))
    throw NotCentralElement(z1);
  if (!center(b).contains(unit_vector(b.dim(), z2)))
    throw NotCentralElement(z2);

  const std::size_t na = a.dim(), nb = b.dim(), n = na + nb - 1, glued = n - 1;
  auto remap = [glued](std::size_t k, std::size_t skip, std::size_t offset) {
    if (k == skip)
      return glued;
    return offset + (k < skip ? k : k - 1);
  };

  const Field &f = a.field();
  std::vector<Bracket> br;
  auto copy_part = [&](const LieAlgebra &part, std::size_t skip, std::size_t offset) {
    for (std::size_t i = 0; i < part.dim(); ++i)
      for (std::size_t j = i + 1; j < part.dim(); ++j) {
        if (i == skip || j == skip)
          continue;
        const auto c = part.structure(i, j);
        Vector v(n);
        for (std::size_t k = 0; k < part.dim(); ++k) {
          auto &slot = v[remap(k, skip, offset)];
          slot = f.add(slot, c[k]);
        }
        if (!is_zero(v))
          br.push_back({remap(i, skip, offset), remap(j, skip, offset), std::move(v)});
      }
  };
  copy_part(a, z1, 0);
  copy_part(b, z2, na - 1);

  std::vector<std::string> labels;
  if (!a.labels().empty() && !b.labels().empty()) {
    for (std::size_t k = 0; k < na; ++k)
      if (k != z1)
        labels.push_back(a.labels()[k]);
    for (std::size_t k = 0; k < nb; ++k)
      if (k != z2)
        labels.push_back(b.labels()[k]);
    labels.push_back(a.labels()[z1]);
  }
  // Upper-triangle orientation: remapped pairs keep i < j since both parts
  // preserve order and the glued element never appears as an index.
  return checked(LieAlgebra::from_brackets(f, n, br, std::move(labels)));
}

} // namespace commdeg

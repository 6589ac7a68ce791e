#include "commdeg/linalg.hpp"

#include "commdeg/error.hpp"

#include <utility>

namespace commdeg {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t k) {
  Vector v(n);
  v.at(k) = Field::one();
  return v;
}

Vector add(const Field &f, const Vector &a, const Vector &b) {
  if (a.size() != b.size())
    throw DimensionMismatch(a.size(), b.size());
  Vector out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k)
    out[k] = f.add(a[k], b[k]);
  return out;
}

Vector scale(const Field &f, Fq s, const Vector &a) {
  Vector out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k)
    out[k] = f.mul(s, a[k]);
  return out;
}

bool is_zero(const Vector &v) {
  for (auto x : v)
    if (!x.is_zero())
      return false;
  return true;
}

Matrix Matrix::identity(const Field &field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t k = 0; k < n; ++k)
    m(k, k) = Field::one();
  return m;
}

Matrix Matrix::from_rows(const Field &field, std::span<const Vector> rows,
                         std::size_t cols) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw DimensionMismatch(cols, rows[r].size());
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(const Vector &v) const {
  if (v.size() != cols_)
    throw DimensionMismatch(cols_, v.size());
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Fq acc = Field::zero();
    for (std::size_t c = 0; c < cols_; ++c)
      acc = field_.add(acc, field_.mul((*this)(r, c), v[c]));
    out[r] = acc;
  }
  return out;
}

std::vector<std::size_t> Matrix::reduce() {
  const Field &f = field_;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
    std::size_t r = lead;
    while (r < rows_ && (*this)(r, c).is_zero())
      ++r;
    if (r == rows_)
      continue;
    if (r != lead)
      for (std::size_t k = 0; k < cols_; ++k)
        std::swap((*this)(r, k), (*this)(lead, k));
    const Fq s = f.inv((*this)(lead, c));
    for (std::size_t k = c; k < cols_; ++k)
      (*this)(lead, k) = f.mul(s, (*this)(lead, k));
    for (std::size_t o = 0; o < rows_; ++o) {
      if (o == lead)
        continue;
      const Fq factor = (*this)(o, c);
      if (factor.is_zero())
        continue;
      for (std::size_t k = c; k < cols_; ++k)
        (*this)(o, k) = f.sub((*this)(o, k), f.mul(factor, (*this)(lead, k)));
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

namespace linalg_detail {

std::size_t rank_in_place(const Field &f, Fq *data, std::size_t rows,
                          std::size_t cols) {
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t r = lead;
    while (r < rows && data[r * cols + c].is_zero())
      ++r;
    if (r == rows)
      continue;
    Fq *pivot_row = data + lead * cols;
    if (r != lead)
      for (std::size_t k = c; k < cols; ++k)
        std::swap(data[r * cols + k], pivot_row[k]);
    const Fq s = f.inv(pivot_row[c]);
    for (std::size_t k = c; k < cols; ++k)
      pivot_row[k] = f.mul(s, pivot_row[k]);
    // Forward elimination suffices for rank.
    for (std::size_t o = lead + 1; o < rows; ++o) {
      Fq *row = data + o * cols;
      const Fq factor = row[c];
      if (factor.is_zero())
        continue;
      for (std::size_t k = c; k < cols; ++k)
        row[k] = f.sub(row[k], f.mul(factor, pivot_row[k]));
    }
    ++lead;
  }
  return lead;
}

} // namespace linalg_detail

std::size_t rank(const Matrix &m) {
  Matrix scratch = m;
  return scratch.reduce().size();
}

Subspace Subspace::zero(const Field &field, std::size_t ambient) {
  return span(field, {}, ambient);
}

Subspace Subspace::full(const Field &field, std::size_t ambient) {
  std::vector<Vector> units;
  for (std::size_t k = 0; k < ambient; ++k)
    units.push_back(unit_vector(ambient, k));
  return span(field, units, ambient);
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    auto row = basis_.row(r);
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

bool Subspace::contains(const Vector &v) const {
  if (v.size() != ambient())
    throw DimensionMismatch(ambient(), v.size());
  // Reduce v against the echelon basis; v is in the span iff it vanishes.
  const Field &f = field();
  Vector w = v;
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const Fq factor = w[pivots_[r]];
    if (factor.is_zero())
      continue;
    for (std::size_t k = 0; k < w.size(); ++k)
      w[k] = f.sub(w[k], f.mul(factor, basis_(r, k)));
  }
  return is_zero(w);
}

bool Subspace::contains(const Subspace &other) const {
  if (other.ambient() != ambient())
    throw DimensionMismatch(ambient(), other.ambient());
  for (const auto &v : other.basis_vectors())
    if (!contains(v))
      return false;
  return true;
}

Subspace span(const Field &field, std::span<const Vector> vectors,
              std::size_t ambient) {
  Matrix m = Matrix::from_rows(field, vectors, ambient);
  auto pivots = m.reduce();
  Matrix basis(field, pivots.size(), ambient);
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t c = 0; c < ambient; ++c)
      basis(r, c) = m(r, c);
  return Subspace(std::move(basis), std::move(pivots));
}

Subspace kernel(const Matrix &m) {
  const Field &f = m.field();
  Matrix r = m;
  const auto pivots = r.reduce();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots)
    is_pivot[c] = true;
  std::vector<Vector> gens;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free])
      continue;
    Vector v(m.cols());
    v[free] = Field::one();
    for (std::size_t row = 0; row < pivots.size(); ++row)
      v[pivots[row]] = f.neg(r(row, free));
    gens.push_back(std::move(v));
  }
  return span(f, gens, m.cols());
}

Subspace subspace_sum(const Subspace &a, const Subspace &b) {
  if (a.ambient() != b.ambient())
    throw DimensionMismatch(a.ambient(), b.ambient());
  if (!(a.field() == b.field()))
    throw FieldMismatch();
  auto gens = a.basis_vectors();
  for (auto &v : b.basis_vectors())
    gens.push_back(std::move(v));
  return span(a.field(), gens, a.ambient());
}

} // namespace commdeg

#pragma once

#include "commdeg/field.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace commdeg {

/// Coordinates of a vector in F_q^n.
using Vector = std::vector<Fq>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t k);
Vector add(const Field &f, const Vector &a, const Vector &b);
Vector scale(const Field &f, Fq s, const Vector &a);
bool is_zero(const Vector &v);

/// Dense row-major matrix over F_q.
class Matrix {
public:
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(const Field &field, std::size_t n);
  /// Matrix whose rows are the given vectors, each of length cols.
  static Matrix from_rows(const Field &field, std::span<const Vector> rows,
                          std::size_t cols);

  const Field &field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Fq &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Fq operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Fq> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vector column(std::size_t c) const;

  Matrix transpose() const;
  Vector apply(const Vector &v) const;

  /// Reduces to reduced row-echelon form in place (first-nonzero pivoting)
  /// and returns the pivot columns.
  std::vector<std::size_t> reduce();

  friend bool operator==(const Matrix &a, const Matrix &b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
  }

private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Fq> data_;
};

/// A subspace of F_q^n held as its reduced row-echelon basis, so two equal
/// subspaces compare equal structurally.
class Subspace {
public:
  static Subspace zero(const Field &field, std::size_t ambient);
  static Subspace full(const Field &field, std::size_t ambient);

  const Field &field() const { return basis_.field(); }
  std::size_t ambient() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix &basis() const { return basis_; }
  const std::vector<std::size_t> &pivots() const { return pivots_; }
  std::vector<Vector> basis_vectors() const;

  bool contains(const Vector &v) const;
  bool contains(const Subspace &other) const;

  friend bool operator==(const Subspace &a, const Subspace &b) {
    return a.basis_ == b.basis_;
  }

private:
  friend Subspace span(const Field &, std::span<const Vector>, std::size_t);
  Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const Matrix &m);
/// Null space {v : m v = 0} in F_q^cols.
Subspace kernel(const Matrix &m);
Subspace span(const Field &field, std::span<const Vector> vectors,
              std::size_t ambient);
Subspace subspace_sum(const Subspace &a, const Subspace &b);

namespace linalg_detail {
/// Rank of a rows x cols row-major block, destroying its contents.
std::size_t rank_in_place(const Field &f, Fq *data, std::size_t rows,
                          std::size_t cols);
} // namespace linalg_detail

} // namespace commdeg

#pragma once

#include "commdeg/error.hpp"
#include "commdeg/field.hpp"
#include "commdeg/linalg.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace commdeg {

/// One upper-triangle structure constant: [e_i, e_j] = value (0-based, i < j).
struct Bracket {
  std::size_t i, j;
  Vector value;
};

/// Finite-dimensional Lie algebra over F_q given by structure constants
/// [e_i, e_j] = sum_k c[i][j][k] e_k. Both orientations are stored.
///
/// A LieAlgebra can hold an arbitrary tensor; validate() decides whether it
/// is actually alternating and satisfies Jacobi. Every named constructor
/// below returns a validated algebra.
class LieAlgebra {
public:
  /// Builds the tensor from upper-triangle brackets, filling c[j][i] = -c[i][j].
  static LieAlgebra from_brackets(Field field, std::size_t n,
                                  std::span<const Bracket> brackets,
                                  std::vector<std::string> labels = {});
  /// Raw tensor of n*n*n entries indexed (i*n + j)*n + k, taken as is.
  static LieAlgebra from_tensor(Field field, std::size_t n, std::vector<Fq> tensor,
                                std::vector<std::string> labels = {});

  const Field &field() const { return field_; }
  std::size_t dim() const { return n_; }
  /// Coordinates of [e_i, e_j].
  std::span<const Fq> structure(std::size_t i, std::size_t j) const {
    return {c_.data() + (i * n_ + j) * n_, n_};
  }
  const std::vector<Fq> &tensor() const { return c_; }
  const std::vector<std::string> &labels() const { return labels_; }
  /// Direct summands this algebra was built from (empty unless it came out
  /// of direct_sum); flattened, in order.
  const std::vector<LieAlgebra> &summands() const { return summands_; }

  /// Field, dimension and tensor; labels and summand provenance are metadata.
  friend bool operator==(const LieAlgebra &a, const LieAlgebra &b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.c_ == b.c_;
  }

private:
  friend LieAlgebra direct_sum(const LieAlgebra &, const LieAlgebra &);

  LieAlgebra(Field field, std::size_t n, std::vector<Fq> c,
             std::vector<std::string> labels)
      : field_(std::move(field)), n_(n), c_(std::move(c)), labels_(std::move(labels)) {}

  Field field_;
  std::size_t n_;
  std::vector<Fq> c_;
  std::vector<std::string> labels_;
  std::vector<LieAlgebra> summands_;
};

struct StructureReport {
  std::size_t dim_derived = 0;
  std::size_t dim_center = 0;
  /// Absent when the lower central series stabilizes at a nonzero term.
  std::optional<std::size_t> nilpotency_class;
  bool is_abelian = true;

  friend bool operator==(const StructureReport &, const StructureReport &) = default;
};

/// Jacobi failure on the basis triple (i, j, k), 0-based, with the nonzero
/// cyclic sum [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j].
class JacobiFails : public InvalidAlgebra {
public:
  JacobiFails(std::size_t i, std::size_t j, std::size_t k, Vector residual);
  std::size_t i() const { return i_; }
  std::size_t j() const { return j_; }
  std::size_t k() const { return k_; }
  const Vector &residual() const { return residual_; }

private:
  std::size_t i_, j_, k_;
  Vector residual_;
};

/// Checks alternation and Jacobi, throwing NotAlternating / JacobiFails on
/// the first offending index tuple, and returns the structural invariants.
StructureReport validate(const LieAlgebra &L);
/// Alternation and Jacobi only, without throwing or computing invariants.
bool is_lie(const LieAlgebra &L);
StructureReport structure_report(const LieAlgebra &L);

Vector bracket(const LieAlgebra &L, const Vector &x, const Vector &y);
/// Column j is [x, e_j]: Im ad_x is the column space, C_L(x) the kernel.
Matrix ad_matrix(const LieAlgebra &L, const Vector &x);
Subspace centralizer(const LieAlgebra &L, const Vector &x);
Subspace center(const LieAlgebra &L);
Subspace derived_subalgebra(const LieAlgebra &L);
/// L^1 = L, L^{k+1} = [L, L^k]; ends at the zero subspace or at the first
/// repeated term.
std::vector<Subspace> lower_central_series(const LieAlgebra &L);
std::optional<std::size_t> nilpotency_class(const LieAlgebra &L);

/// A(n).
LieAlgebra make_abelian(const Field &field, std::size_t n);
/// H(m), basis (x_1..x_m, y_1..y_m, z), [x_i, y_i] = z.
LieAlgebra make_heisenberg(const Field &field, std::size_t m);
/// <x, y | [x, y] = x>, basis (x, y).
LieAlgebra make_affine(const Field &field);
/// L_{4,3}, basis (a1, a2, a3, z): [a1,a2] = a3, [a1,a3] = z.
LieAlgebra make_L43(const Field &field);
/// L_{5,5}, basis (a1, a2, a3, a4, z): [a1,a2] = a3, [a1,a3] = z, [a2,a4] = z.
LieAlgebra make_L55(const Field &field);

LieAlgebra direct_sum(const LieAlgebra &a, const LieAlgebra &b);
/// L1 and L2 glued along central basis vectors e_z1 and e_z2 (0-based).
/// Basis: L1 without z1, L2 without z2, then the shared central element.
LieAlgebra central_product(const LieAlgebra &a, std::size_t z1,
                           const LieAlgebra &b, std::size_t z2);

} // namespace commdeg

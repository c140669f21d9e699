#pragma once

#include <vector>

#include "jordan/linalg.hpp"

namespace jordan {

// Commutative multiplication on C^n: mu(e_i, e_j) = sum_k mu_ij^k e_k.
// Stored densely and symmetrically, so the Frobenius norm over all ordered
// pairs (i, j) counts off-diagonal coefficients twice. Indices are 0-based.
class StructureTensor {
 public:
  StructureTensor() = default;
  explicit StructureTensor(int n);

  int dim() const { return n_; }

  cd operator()(int i, int j, int k) const { return c_[idx(i, j, k)]; }
  // Sets mu_ij^k and mu_ji^k.
  void set(int i, int j, int k, cd v);
  void add(int i, int j, int k, cd v);

  double norm_sq() const;
  double norm() const;
  bool is_zero() const;
  double max_abs() const;
  // Hermitian product sum over ordered pairs, conjugate-linear in the second slot.
  cd inner(const StructureTensor& o) const;

  // Coordinates over i <= j with weight sqrt(2) on i < j: an isometry onto C^N.
  CVec packed() const;
  static StructureTensor from_packed(int n, const CVec& v);
  static int packed_size(int n) { return n * (n + 1) / 2 * n; }

  StructureTensor normalized() const;

  StructureTensor& operator+=(const StructureTensor& o);
  StructureTensor& operator-=(const StructureTensor& o);
  StructureTensor& operator*=(cd s);
  friend StructureTensor operator+(StructureTensor a, const StructureTensor& b) { return a += b; }
  friend StructureTensor operator-(StructureTensor a, const StructureTensor& b) { return a -= b; }
  friend StructureTensor operator*(cd s, StructureTensor a) { return a *= s; }
  friend StructureTensor operator*(StructureTensor a, cd s) { return a *= s; }

  const std::vector<cd>& raw() const { return c_; }
  std::vector<cd>& raw() { return c_; }

 private:
  int idx(int i, int j, int k) const { return (i * n_ + j) * n_ + k; }
  void check_index(int i, int j, int k) const;

  int n_ = 0;
  std::vector<cd> c_;
};

double distance(const StructureTensor& a, const StructureTensor& b);

}  // namespace jordan

#include "jordan/tensor.hpp"

#include <cmath>
#include <numbers>

namespace jordan {

StructureTensor::StructureTensor(int n) : n_(n), c_(static_cast<std::size_t>(n) * n * n) {
  if (n <= 0) throw JordanError("dimension must be positive");
}

void StructureTensor::check_index(int i, int j, int k) const {
  if (i < 0 || j < 0 || k < 0 || i >= n_ || j >= n_ || k >= n_)
    throw JordanError("structure constant index out of range");
}

void StructureTensor::set(int i, int j, int k, cd v) {
  check_index(i, j, k);
  c_[idx(i, j, k)] = v;
  c_[idx(j, i, k)] = v;
}

void StructureTensor::add(int i, int j, int k, cd v) {
  check_index(i, j, k);
  c_[idx(i, j, k)] += v;
  if (i != j) c_[idx(j, i, k)] += v;
}

double StructureTensor::norm_sq() const {
  double s = 0;
  for (const cd& z : c_) s += std::norm(z);
  return s;
}

double StructureTensor::norm() const { return std::sqrt(norm_sq()); }

bool StructureTensor::is_zero() const { return max_abs() == 0.0; }

double StructureTensor::max_abs() const {
  double m = 0;
  for (const cd& z : c_) m = std::max(m, std::abs(z));
  return m;
}

cd StructureTensor::inner(const StructureTensor& o) const {
  if (o.n_ != n_) throw JordanError("dimension mismatch");
  cd s = 0;
  for (std::size_t t = 0; t < c_.size(); ++t) s += c_[t] * std::conj(o.c_[t]);
  return s;
}

CVec StructureTensor::packed() const {
  CVec v(packed_size(n_));
  int t = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j) {
      const double w = i == j ? 1.0 : std::numbers::sqrt2;
      for (int k = 0; k < n_; ++k) v(t++) = w * c_[idx(i, j, k)];
    }
  return v;
}

StructureTensor StructureTensor::from_packed(int n, const CVec& v) {
  if (v.size() != packed_size(n)) throw JordanError("packed vector has wrong length");
  StructureTensor mu(n);
  int t = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const double w = i == j ? 1.0 : std::numbers::sqrt2;
      for (int k = 0; k < n; ++k) mu.set(i, j, k, v(t++) / w);
    }
  return mu;
}

StructureTensor StructureTensor::normalized() const {
  const double r = norm();
  if (r == 0.0) throw JordanError("zero tensor cannot be normalized");
  StructureTensor out = *this;
  out *= cd(1.0 / r);
  return out;
}

StructureTensor& StructureTensor::operator+=(const StructureTensor& o) {
  if (o.n_ != n_) throw JordanError("dimension mismatch");
  for (std::size_t t = 0; t < c_.size(); ++t) c_[t] += o.c_[t];
  return *this;
}

StructureTensor& StructureTensor::operator-=(const StructureTensor& o) {
  if (o.n_ != n_) throw JordanError("dimension mismatch");
  for (std::size_t t = 0; t < c_.size(); ++t) c_[t] -= o.c_[t];
  return *this;
}

StructureTensor& StructureTensor::operator*=(cd s) {
  for (cd& z : c_) z *= s;
  return *this;
}

double distance(const StructureTensor& a, const StructureTensor& b) { return (a - b).norm(); }

}  // namespace jordan

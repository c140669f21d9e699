#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jordan/rational.hpp"
#include "jordan/tensor.hpp"

namespace jordan {

inline constexpr double kSolitonTol = 1e-8;
inline constexpr std::int64_t kSnapMaxDen = 64;
inline constexpr double kSnapTol = 1e-6;
inline constexpr double kMultiplicityGap = 1e-6;

// M = -2 sum L_i* L_i + sum L_i L_i*
CMat moment_matrix(const StructureTensor& mu);
double energy(const StructureTensor& mu);
// 4/||mu||^2 (m.mu - E mu)
StructureTensor energy_gradient(const StructureTensor& mu);

struct MomentReport {
  CMat M;
  CMat m;
  double energy = 0;
  double c = 0;
  CMat D;
  double soliton_residual = 0;
  bool is_soliton = false;
  // max |<M, D>| over an orthonormal derivation basis
  double derivation_pairing = 0;
};
MomentReport soliton_check(const StructureTensor& mu, double tol = kSolitonTol);

struct SolitonType {
  std::vector<std::int64_t> d;  // coprime, ascending
  std::vector<int> mult;
  std::vector<Fraction> beta;   // ascending, sums to -1
  Fraction energy;
  RVec beta_float;
  double energy_float = 0;

  std::string str() const;  // "(0<1<2;1,1,1)"
};
// Throws JordanError when an eigenvalue has no rational within tolerance.
SolitonType soliton_type(const StructureTensor& mu);
std::optional<SolitonType> try_soliton_type(const StructureTensor& mu);
// Type from a sorted beta, for table comparisons.
SolitonType type_from_beta(const std::vector<Fraction>& beta);

// ||m + I/n||
double sl_residual(const StructureTensor& mu);

}  // namespace jordan

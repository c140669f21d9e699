#pragma once

#include <optional>
#include <vector>

#include "jordan/rational.hpp"
#include "jordan/tensor.hpp"

namespace jordan {

struct FlowOptions;

// Diagonal of alpha_ij^k = -E_ii - E_jj + E_kk, with (i, j, k) 0-based.
struct WeightVector {
  Eigen::VectorXi w;
  int i = 0, j = 0, k = 0;
};
WeightVector weight(int n, int i, int j, int k);
// Distinct weights of coefficients with |mu_ij^k| > tol * max |coefficient|.
std::vector<WeightVector> support_weights(const StructureTensor& mu, double tol = 1e-10);

struct MinNormResult {
  RVec point;
  RVec coeffs;              // barycentric, same order as the input
  double certificate_gap = 0;  // min_v <b, v> - ||b||^2, nonnegative at optimum
  int iterations = 0;
};
// Wolfe's minimum-norm-point algorithm on the convex hull of the vectors.
MinNormResult min_norm_point(const std::vector<RVec>& vectors);

struct StratumLabel {
  std::vector<Fraction> beta;  // ascending
  Fraction norm_sq;
  RVec beta_float;
  double norm_sq_float = 0;
  bool snapped = false;
};
StratumLabel label_from(const RVec& beta);

struct BetaResult {
  StratumLabel label;
  std::vector<WeightVector> support;
  MinNormResult mnp;
};
BetaResult beta_mu_full(const StructureTensor& mu, double tol = 1e-10);
StratumLabel beta_mu(const StructureTensor& mu);
// beta_mu after a unitary change to the eigenbasis of M_mu.
StratumLabel beta_mu_eigenbasis(const StructureTensor& mu);
// Terminal label of the energy flow started at mu.
StratumLabel stratum_of(const StructureTensor& mu, const FlowOptions& opts);

}  // namespace jordan

#include "jordan/moment.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "jordan/algebra.hpp"

namespace jordan {

namespace {

void require_nonzero(const StructureTensor& mu) {
  if (mu.is_zero()) throw JordanError("zero tensor has no moment matrix");
}

}  // namespace

CMat moment_matrix(const StructureTensor& mu) {
  require_nonzero(mu);
  const int n = mu.dim();
  CMat M = CMat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const CMat L = left_mult_basis(mu, i);
    M.noalias() -= 2.0 * L.adjoint() * L;
    M.noalias() += L * L.adjoint();
  }
  return 0.5 * (M + M.adjoint());
}

double energy(const StructureTensor& mu) {
  const CMat M = moment_matrix(mu);
  const double nn = mu.norm_sq();
  return mat_norm_sq(M) / (nn * nn);
}

StructureTensor energy_gradient(const StructureTensor& mu) {
  const CMat M = moment_matrix(mu);
  const double nn = mu.norm_sq();
  const CMat m = M / nn;
  const double E = mat_norm_sq(m);
  return cd(4.0 / nn) * (inf_act(m, mu) - cd(E) * mu);
}

MomentReport soliton_check(const StructureTensor& mu, double tol) {
  MomentReport r;
  r.M = moment_matrix(mu);
  const int n = mu.dim();
  const double nn = mu.norm_sq();
  r.m = r.M / nn;
  r.energy = mat_norm_sq(r.m);
  r.c = -mat_norm_sq(r.M) / nn;
  r.D = r.M - r.c * CMat::Identity(n, n);
  r.soliton_residual = inf_act(r.D, mu).norm() / std::sqrt(nn);
  r.is_soliton = r.soliton_residual <= tol;
  for (const CMat& D : derivation_algebra(mu).basis)
    r.derivation_pairing = std::max(r.derivation_pairing, std::abs(mat_inner(r.M, D)));
  return r;
}

std::string SolitonType::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "<" : "") + std::to_string(d[i]);
  s += ";";
  for (std::size_t i = 0; i < mult.size(); ++i) s += (i ? "," : "") + std::to_string(mult[i]);
  return s + ")";
}

namespace {

// Coprime integers proportional to the shifted eigenvalues, grouped.
void fill_type(SolitonType& t, const std::vector<Fraction>& shifted) {
  std::int64_t l = 1;
  for (const auto& f : shifted) l = std::lcm(l, f.den);
  std::vector<std::int64_t> ints;
  std::int64_t g = 0;
  for (const auto& f : shifted) {
    ints.push_back(f.num * (l / f.den));
    g = std::gcd(g, std::abs(ints.back()));
  }
  if (g == 0) g = 1;
  t.d.clear();
  t.mult.clear();
  for (auto v : ints) {
    v /= g;
    if (!t.d.empty() && t.d.back() == v)
      ++t.mult.back();
    else {
      t.d.push_back(v);
      t.mult.push_back(1);
    }
  }
}

}  // namespace

SolitonType type_from_beta(const std::vector<Fraction>& beta) {
  SolitonType t;
  t.beta = beta;
  std::sort(t.beta.begin(), t.beta.end());
  Fraction E(0);
  for (const auto& b : t.beta) E = E + b * b;
  t.energy = E;
  t.energy_float = E.value();
  t.beta_float = RVec(t.beta.size());
  std::vector<Fraction> shifted;
  for (std::size_t i = 0; i < t.beta.size(); ++i) {
    t.beta_float(i) = t.beta[i].value();
    shifted.push_back(t.beta[i] + E);
  }
  fill_type(t, shifted);
  return t;
}

std::optional<SolitonType> try_soliton_type(const StructureTensor& mu) {
  const int n = mu.dim();
  const CMat m = moment_matrix(mu) / mu.norm_sq();
  Eigen::SelfAdjointEigenSolver<CMat> es(m);
  RVec ev = es.eigenvalues();  // ascending
  const double E = ev.squaredNorm();
  // Cluster eigenvalues closer than the multiplicity gap before snapping.
  std::vector<double> vals(ev.data(), ev.data() + n);
  for (int i = 1; i < n; ++i)
    if (vals[i] - vals[i - 1] < kMultiplicityGap) vals[i] = vals[i - 1];
  std::vector<Fraction> beta;
  for (double v : vals) {
    auto f = snap(v, kSnapMaxDen, kSnapTol);
    if (!f) return std::nullopt;
    beta.push_back(*f);
  }
  SolitonType t = type_from_beta(beta);
  if (std::fabs(t.energy.value() - E) > kSnapTol) return std::nullopt;
  t.beta_float = ev;
  t.energy_float = E;
  return t;
}

SolitonType soliton_type(const StructureTensor& mu) {
  auto t = try_soliton_type(mu);
  if (!t) throw JordanError("eigenvalues of m(mu) do not snap to rationals with denominator <= 64");
  return *t;
}

double sl_residual(const StructureTensor& mu) {
  const int n = mu.dim();
  const CMat m = moment_matrix(mu) / mu.norm_sq();
  return (m + CMat::Identity(n, n) / static_cast<double>(n)).norm();
}

}  // namespace jordan

#include "jordan/stratify.hpp"

#include <algorithm>
#include <cmath>

#include "jordan/algebra.hpp"
#include "jordan/flow.hpp"
#include "jordan/moment.hpp"

namespace jordan {

WeightVector weight(int n, int i, int j, int k) {
  WeightVector w;
  w.w = Eigen::VectorXi::Zero(n);
  w.w(i) -= 1;
  w.w(j) -= 1;
  w.w(k) += 1;
  w.i = i;
  w.j = j;
  w.k = k;
  return w;
}

std::vector<WeightVector> support_weights(const StructureTensor& mu, double tol) {
  const int n = mu.dim();
  const double cut = tol * mu.max_abs();
  if (mu.max_abs() == 0.0) throw JordanError("zero tensor has empty support");
  std::vector<WeightVector> out;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (std::abs(mu(i, j, k)) <= cut) continue;
        WeightVector w = weight(n, i, j, k);
        const bool seen = std::any_of(out.begin(), out.end(), [&](const WeightVector& o) { return o.w == w.w; });
        if (!seen) out.push_back(w);
      }
  return out;
}

namespace {

// Weights on the given points of the point of minimal norm in their affine hull.
RVec affine_min_norm(const std::vector<RVec>& pts, const std::vector<int>& S) {
  const int m = static_cast<int>(S.size());
  RMat K = RMat::Zero(m + 1, m + 1);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) K(a, b) = pts[S[a]].dot(pts[S[b]]);
    K(a, m) = 1.0;
    K(m, a) = 1.0;
  }
  RVec rhs = RVec::Zero(m + 1);
  rhs(m) = 1.0;
  RVec sol = K.completeOrthogonalDecomposition().solve(rhs);
  return sol.head(m);
}

}  // namespace

MinNormResult min_norm_point(const std::vector<RVec>& P) {
  if (P.empty()) throw JordanError("min_norm_point needs at least one vector");
  const int N = static_cast<int>(P.size());
  const auto d = P[0].size();
  double scale = 0;
  int j0 = 0;
  for (int i = 0; i < N; ++i) {
    if (P[i].size() != d) throw JordanError("vectors have different lengths");
    scale = std::max(scale, P[i].squaredNorm());
    if (P[i].squaredNorm() < P[j0].squaredNorm()) j0 = i;
  }
  scale = std::max(scale, 1.0);
  const double z1 = 1e-14 * scale, z2 = 1e-12;

  std::vector<int> S{j0};
  std::vector<double> lam{1.0};
  RVec x = P[j0];
  MinNormResult res;
  const int cap = 100 * (N + 10);
  for (; res.iterations < cap; ++res.iterations) {
    int j = 0;
    double best = x.dot(P[0]);
    for (int i = 1; i < N; ++i)
      if (x.dot(P[i]) < best) {
        best = x.dot(P[i]);
        j = i;
      }
    if (best >= x.squaredNorm() - z1) break;
    if (std::find(S.begin(), S.end(), j) != S.end()) break;
    S.push_back(j);
    lam.push_back(0.0);
    for (int minor = 0; minor < 10 * N + 10; ++minor) {
      RVec w = affine_min_norm(P, S);
      if ((w.array() > z2).all()) {
        lam.assign(w.data(), w.data() + w.size());
        break;
      }
      double theta = 1.0;
      int drop = -1;
      for (std::size_t a = 0; a < S.size(); ++a)
        if (w(a) <= z2) {
          const double denom = lam[a] - w(a);
          const double t = denom > 0 ? lam[a] / denom : 0.0;
          if (t < theta || drop < 0) {
            theta = t;
            drop = static_cast<int>(a);
          }
        }
      for (std::size_t a = 0; a < S.size(); ++a) lam[a] = (1 - theta) * lam[a] + theta * w(a);
      lam[drop] = 0.0;
      std::vector<int> S2;
      std::vector<double> l2;
      for (std::size_t a = 0; a < S.size(); ++a)
        if (lam[a] > z2) {
          S2.push_back(S[a]);
          l2.push_back(lam[a]);
        }
      S.swap(S2);
      lam.swap(l2);
      double sum = 0;
      for (double v : lam) sum += v;
      for (double& v : lam) v /= sum;
    }
    x = RVec::Zero(d);
    for (std::size_t a = 0; a < S.size(); ++a) x += lam[a] * P[S[a]];
  }
  if (res.iterations >= cap) throw JordanError("min_norm_point did not converge");
  res.point = x;
  res.coeffs = RVec::Zero(N);
  for (std::size_t a = 0; a < S.size(); ++a) res.coeffs(S[a]) = lam[a];
  double gap = std::numeric_limits<double>::infinity();
  for (const RVec& v : P) gap = std::min(gap, x.dot(v) - x.squaredNorm());
  res.certificate_gap = gap;
  return res;
}

StratumLabel label_from(const RVec& beta_in) {
  StratumLabel l;
  std::vector<double> b(beta_in.data(), beta_in.data() + beta_in.size());
  std::sort(b.begin(), b.end());
  for (std::size_t i = 1; i < b.size(); ++i)
    if (b[i] - b[i - 1] < kMultiplicityGap) b[i] = b[i - 1];
  l.beta_float = Eigen::Map<RVec>(b.data(), static_cast<Eigen::Index>(b.size()));
  l.norm_sq_float = l.beta_float.squaredNorm();
  l.snapped = true;
  Fraction ns(0);
  for (double v : b) {
    auto f = snap(v, kSnapMaxDen, kSnapTol);
    if (!f) {
      l.snapped = false;
      l.beta.clear();
      break;
    }
    l.beta.push_back(*f);
    ns = ns + *f * *f;
  }
  if (l.snapped) {
    l.norm_sq = ns;
    if (std::fabs(ns.value() - l.norm_sq_float) > kSnapTol) l.snapped = false;
  }
  return l;
}

BetaResult beta_mu_full(const StructureTensor& mu, double tol) {
  BetaResult r;
  r.support = support_weights(mu, tol);
  std::vector<RVec> pts;
  for (const auto& w : r.support) pts.push_back(w.w.cast<double>());
  r.mnp = min_norm_point(pts);
  r.label = label_from(r.mnp.point);
  return r;
}

StratumLabel beta_mu(const StructureTensor& mu) { return beta_mu_full(mu).label; }

StratumLabel beta_mu_eigenbasis(const StructureTensor& mu) {
  Eigen::SelfAdjointEigenSolver<CMat> es(moment_matrix(mu));
  return beta_mu(act(es.eigenvectors().adjoint(), mu));
}

StratumLabel stratum_of(const StructureTensor& mu, const FlowOptions& opts) {
  FlowTrace tr = run_flow(mu, opts);
  Eigen::SelfAdjointEigenSolver<CMat> es(tr.terminal_report.m);
  return label_from(es.eigenvalues());
}

}  // namespace jordan

#include "jordan/parallel.hpp"

#include <omp.h>

#include "jordan/algebra.hpp"

namespace jordan {

namespace {

int threads(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

}  // namespace

int max_threads() { return omp_get_max_threads(); }

std::vector<MomentReport> batch_soliton_check(const std::vector<StructureTensor>& mus, double tol, int jobs) {
  std::vector<MomentReport> out(mus.size());
  const int count = static_cast<int>(mus.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads(jobs))
  for (int i = 0; i < count; ++i) out[i] = soliton_check(mus[i], tol);
  return out;
}

std::vector<MomentReport> batch_soliton_check_serial(const std::vector<StructureTensor>& mus, double tol) {
  std::vector<MomentReport> out;
  out.reserve(mus.size());
  for (const StructureTensor& mu : mus) out.push_back(soliton_check(mu, tol));
  return out;
}

std::vector<FlowTrace> batch_flow(const std::vector<StructureTensor>& mus, const FlowOptions& opts, int jobs) {
  std::vector<FlowTrace> out(mus.size());
  const int count = static_cast<int>(mus.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads(jobs))
  for (int i = 0; i < count; ++i) out[i] = run_flow(mus[i], opts);
  return out;
}

std::vector<FlowTrace> batch_flow_serial(const std::vector<StructureTensor>& mus, const FlowOptions& opts) {
  std::vector<FlowTrace> out;
  out.reserve(mus.size());
  for (const StructureTensor& mu : mus) out.push_back(run_flow(mu, opts));
  return out;
}

double jordan_defect_parallel(const StructureTensor& mu, int jobs) {
  // Same quantity as jordan_defect, with the outer index a split over threads.
  const int n = mu.dim();
  std::vector<CMat> L(n);
  for (int a = 0; a < n; ++a) L[a] = left_mult_basis(mu, a);
  auto left = [&](const CVec& y) {
    CMat Ly = CMat::Zero(n, n);
    for (int c = 0; c < n; ++c) Ly += y(c) * L[c];
    return Ly;
  };
  std::vector<CMat> LP(n * n);
  for (int c = 0; c < n; ++c)
    for (int d = 0; d < n; ++d) LP[c * n + d] = left(L[c].col(d));
  // (x e_c) e_d - x (e_c e_d)
  auto assoc = [&](const CVec& x, int c, int d) { return CVec(L[d] * (L[c] * x) - LP[c * n + d] * x); };
  double worst = 0;
#pragma omp parallel for reduction(max : worst) num_threads(threads(jobs))
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const CVec s = assoc(L[a].col(b), c, d) + assoc(L[b].col(d), c, a) + assoc(L[d].col(a), c, b);
          worst = std::max(worst, s.norm());
        }
  return worst;
}

}  // namespace jordan

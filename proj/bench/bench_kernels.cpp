// Serial reference vs OpenMP batch kernels. Usage: bench_kernels [repeats] [threads]
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <vector>

#include "jordan/algebra.hpp"
#include "jordan/catalog.hpp"
#include "jordan/flow.hpp"
#include "jordan/parallel.hpp"

using namespace jordan;

namespace {

double best_of(int repeats, const std::function<void()>& f) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

bool all_same = true;

void row(const char* name, double serial, double parallel, bool same) {
  all_same = all_same && same;
  std::printf("%-28s %10.4f %10.4f %8.2fx  %s\n", name, serial, parallel, serial / parallel,
              same ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
  const int jobs = argc > 2 ? std::atoi(argv[2]) : 0;

  std::mt19937_64 rng(1);
  std::vector<StructureTensor> moved;
  for (int round = 0; round < 4; ++round)
    for (const CatalogEntry* e : catalog_dim(0)) moved.push_back(act(random_group_element(e->dim, rng), refined_tensor(*e)));
  std::vector<StructureTensor> flows;
  for (const CatalogEntry* e : catalog_dim(3)) flows.push_back(act(random_group_element(3, rng), e->tensor));
  for (const CatalogEntry* e : catalog_dim(4))
    if (e->distinguished) flows.push_back(act(random_group_element(4, rng), refined_tensor(*e)));
  StructureTensor big(9);
  std::normal_distribution<double> N;
  for (int i = 0; i < 9; ++i)
    for (int j = i; j < 9; ++j)
      for (int k = 0; k < 9; ++k) big.set(i, j, k, cd(N(rng), N(rng)));

  std::printf("threads: %d, repeats: %d\n", jobs > 0 ? jobs : max_threads(), repeats);
  std::printf("%-28s %10s %10s %9s\n", "kernel", "serial s", "openmp s", "speedup");

  std::vector<MomentReport> a, b;
  const double s1 = best_of(repeats, [&] { a = batch_soliton_check_serial(moved); });
  const double p1 = best_of(repeats, [&] { b = batch_soliton_check(moved, kSolitonTol, jobs); });
  bool same = a.size() == b.size();
  for (std::size_t i = 0; same && i < a.size(); ++i) same = a[i].soliton_residual == b[i].soliton_residual;
  row("soliton_check x388", s1, p1, same);

  std::vector<FlowTrace> fa, fb;
  const double s2 = best_of(repeats, [&] { fa = batch_flow_serial(flows, FlowOptions{}); });
  const double p2 = best_of(repeats, [&] { fb = batch_flow(flows, FlowOptions{}, jobs); });
  same = fa.size() == fb.size();
  for (std::size_t i = 0; same && i < fa.size(); ++i) same = fa[i].energies == fb[i].energies;
  row("flow (dims 3, 4)", s2, p2, same);

  // Same algorithm on one thread; the evaluation-based jordan_defect is slower
  // for reasons unrelated to threading, so it is timed separately.
  double da = 0, db = 0, dn = 0;
  const double s3 = best_of(repeats, [&] { da = jordan_defect_parallel(big, 1); });
  const double p3 = best_of(repeats, [&] { db = jordan_defect_parallel(big, jobs); });
  row("jordan_defect n=9", s3, p3, da == db);
  const double n3 = best_of(repeats, [&] { dn = jordan_defect(big); });
  std::printf("%-28s %10.4f %21s  rel. diff %.1e\n", "  evaluation-based", n3, "", std::abs(dn - da) / da);

  ReproReport ra, rb;
  const double s4 = best_of(repeats, [&] { ra = reproduce_tables(0, 1); });
  const double p4 = best_of(repeats, [&] { rb = reproduce_tables(0, jobs); });
  row("reproduce_tables", s4, p4, ra.failures == rb.failures && ra.rows.size() == rb.rows.size());
  return all_same ? 0 : 1;
}

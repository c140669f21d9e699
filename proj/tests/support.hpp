#pragma once

#include <random>
#include <vector>

#include "jordan/algebra.hpp"
#include "jordan/catalog.hpp"
#include "jordan/tensor.hpp"

namespace testing {

using namespace jordan;

inline StructureTensor random_tensor(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> N(0.0, 1.0);
  StructureTensor mu(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k) mu.set(i, j, k, cd(N(rng), N(rng)));
  return mu;
}

// Random basis change of a random catalog entry of dimension <= max_dim.
inline StructureTensor random_jordan(std::mt19937_64& rng, int max_dim = 4) {
  const auto entries = catalog_dim(0);
  std::vector<const CatalogEntry*> pool;
  for (const CatalogEntry* e : entries)
    if (e->dim <= max_dim) pool.push_back(e);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  const CatalogEntry& e = *pool[pick(rng)];
  return act(random_group_element(e.dim, rng), refined_tensor(e));
}

// M_ab = <E_ba . mu, mu>, from the pairing Tr(M A) = <A.mu, mu> and the
// infinitesimal action written out for a matrix unit.
inline CMat oracle_moment(const StructureTensor& mu) {
  const int n = mu.dim();
  CMat M = CMat::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      cd s = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s += mu(i, j, a) * std::conj(mu(i, j, b));
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) s -= 2.0 * mu(b, j, k) * std::conj(mu(a, j, k));
      M(a, b) = s;
    }
  return M;
}

// Linearized Jordan identity by evaluation on basis vectors only.
inline double oracle_jordan_defect(const StructureTensor& mu) {
  const int n = mu.dim();
  auto e = [n](int i) { return basis_vector(n, i); };
  auto mul = [&](const CVec& x, const CVec& y) { return evaluate(mu, x, y); };
  auto assoc = [&](const CVec& x, const CVec& y, const CVec& z) { return CVec(mul(mul(x, y), z) - mul(x, mul(y, z))); };
  double worst = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const CVec s = assoc(mul(e(a), e(b)), e(c), e(d)) + assoc(mul(e(b), e(d)), e(c), e(a)) +
                         assoc(mul(e(d), e(a)), e(c), e(b));
          worst = std::max(worst, s.norm());
        }
  return worst;
}

inline CMat diag(std::initializer_list<double> d) {
  RVec v(d.size());
  int i = 0;
  for (double x : d) v(i++) = x;
  return v.cast<cd>().asDiagonal();
}

inline std::vector<const CatalogEntry*> solitons() {
  std::vector<const CatalogEntry*> out;
  for (const CatalogEntry* e : catalog_dim(0))
    if (e->distinguished) out.push_back(e);
  return out;
}

}  // namespace testing

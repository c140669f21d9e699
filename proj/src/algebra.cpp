#include "jordan/algebra.hpp"

#include <cmath>
#include <random>

#include "jordan/moment.hpp"

namespace jordan {

namespace {

void require_len(const StructureTensor& mu, const CVec& x) {
  if (x.size() != mu.dim()) throw JordanError("vector length does not match tensor dimension");
}

// Products of basis vectors, P[a*n+b] = e_a e_b.
std::vector<CVec> basis_products(const StructureTensor& mu) {
  const int n = mu.dim();
  std::vector<CVec> P(static_cast<std::size_t>(n) * n, CVec::Zero(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k) P[a * n + b](k) = mu(a, b, k);
  return P;
}

// x e_c
CVec mul_basis(const std::vector<CVec>& P, int n, const CVec& x, int c) {
  CVec out = CVec::Zero(n);
  for (int i = 0; i < n; ++i)
    if (x(i) != 0.0) out += x(i) * P[i * n + c];
  return out;
}

CVec mul(const std::vector<CVec>& P, int n, const CVec& x, const CVec& y) {
  CVec out = CVec::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (x(i) == 0.0) continue;
    for (int j = 0; j < n; ++j)
      if (y(j) != 0.0) out += x(i) * y(j) * P[i * n + j];
  }
  return out;
}

}  // namespace

CVec basis_vector(int n, int i) {
  CVec e = CVec::Zero(n);
  e(i) = 1.0;
  return e;
}

CVec evaluate(const StructureTensor& mu, const CVec& x, const CVec& y) {
  require_len(mu, x);
  require_len(mu, y);
  const int n = mu.dim();
  CVec out = CVec::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (x(i) == 0.0) continue;
    for (int j = 0; j < n; ++j) {
      if (y(j) == 0.0) continue;
      const cd w = x(i) * y(j);
      for (int k = 0; k < n; ++k) out(k) += w * mu(i, j, k);
    }
  }
  return out;
}

CMat left_mult(const StructureTensor& mu, const CVec& x) {
  require_len(mu, x);
  const int n = mu.dim();
  CMat L = CMat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    if (x(i) == 0.0) continue;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) L(k, j) += x(i) * mu(i, j, k);
  }
  return L;
}

CMat left_mult_basis(const StructureTensor& mu, int i) {
  const int n = mu.dim();
  CMat L(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) L(k, j) = mu(i, j, k);
  return L;
}

double jordan_defect(const StructureTensor& mu) {
  const int n = mu.dim();
  const auto P = basis_products(mu);
  // (x, e_c, e_d) with x = e_a e_b
  auto assoc = [&](const CVec& x, int c, int d) {
    return CVec(mul_basis(P, n, mul_basis(P, n, x, c), d) - mul(P, n, x, P[c * n + d]));
  };
  double worst = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          CVec s = assoc(P[a * n + b], c, d) + assoc(P[b * n + d], c, a) + assoc(P[d * n + a], c, b);
          worst = std::max(worst, s.norm());
        }
  return worst;
}

bool is_jordan(const StructureTensor& mu, double tol) { return jordan_defect(mu) <= tol; }

double associator_defect(const StructureTensor& mu) {
  const int n = mu.dim();
  const auto P = basis_products(mu);
  double worst = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        CVec lhs = mul_basis(P, n, P[a * n + b], c);
        CVec rhs = mul_basis(P, n, P[b * n + c], a);
        worst = std::max(worst, (lhs - rhs).norm());
      }
  return worst;
}

bool is_associative(const StructureTensor& mu, double tol) { return associator_defect(mu) <= tol; }

CMat trace_form(const StructureTensor& mu) {
  const int n = mu.dim();
  CVec tr(n);
  for (int k = 0; k < n; ++k) {
    cd t = 0;
    for (int j = 0; j < n; ++j) t += mu(k, j, j);
    tr(k) = t;
  }
  CMat tau(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cd t = 0;
      for (int k = 0; k < n; ++k) t += mu(i, j, k) * tr(k);
      tau(i, j) = t;
    }
  return tau;
}

Subspace radical(const StructureTensor& mu, double tol) { return kernel(trace_form(mu), tol); }

bool is_semisimple(const StructureTensor& mu) { return radical(mu).dim() == 0; }

CMat action_operator(const StructureTensor& mu) {
  const int n = mu.dim();
  CMat op(StructureTensor::packed_size(n), n * n);
  StructureTensor col(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // (E_ab.mu)_ij^k = d_ka mu_ij^b - d_bi mu_aj^k - d_bj mu_ia^k
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
          for (int k = 0; k < n; ++k) {
            cd v = 0;
            if (k == a) v += mu(i, j, b);
            if (i == b) v -= mu(a, j, k);
            if (j == b) v -= mu(i, a, k);
            col.set(i, j, k, v);
          }
      op.col(a * n + b) = col.packed();
    }
  return op;
}

Derivations derivation_algebra(const StructureTensor& mu, double tol) {
  const int n = mu.dim();
  Subspace K = kernel(action_operator(mu), tol);
  Derivations d;
  d.dim = K.dim();
  d.gap_ratio = K.gap_ratio;
  for (int c = 0; c < K.dim(); ++c) {
    CMat A(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) A(a, b) = K.basis(a * n + b, c);
    d.basis.push_back(A);
  }
  return d;
}

Subspace annihilator(const StructureTensor& mu, double tol) {
  const int n = mu.dim();
  CMat S(n * n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) S(k * n + j, i) = mu(i, j, k);
  return kernel(S, tol);
}

namespace {

CMat products_of(const StructureTensor& mu, const std::vector<CVec>& P, const CMat& U, const CMat& V) {
  const int n = mu.dim();
  CMat out(n, U.cols() * V.cols());
  int c = 0;
  for (int a = 0; a < U.cols(); ++a)
    for (int b = 0; b < V.cols(); ++b) out.col(c++) = mul(P, n, U.col(a), V.col(b));
  return out;
}

}  // namespace

PowerChain power_dims(const StructureTensor& mu, double tol) {
  const int n = mu.dim();
  const auto P = basis_products(mu);
  std::vector<CMat> powers{CMat::Identity(n, n)};  // powers[k-1] spans A^k
  std::vector<int> dims{n};
  for (int k = 2; k <= 3 * n + 1 && dims.back() > 0; ++k) {
    CMat gen(n, 0);
    for (int i = 1; i < k; ++i) {
      const int j = k - i;
      if (i > j) break;  // commutative
      CMat prods = products_of(mu, P, powers[i - 1], powers[j - 1]);
      CMat joined(n, gen.cols() + prods.cols());
      joined << gen, prods;
      gen = column_span(joined, tol).basis;
    }
    powers.push_back(gen);
    dims.push_back(static_cast<int>(gen.cols()));
  }
  while (dims.size() > 1 && dims[dims.size() - 1] == dims[dims.size() - 2]) dims.pop_back();
  PowerChain out;
  out.dims = dims;
  out.nilpotent = dims.back() == 0;
  return out;
}

int product_rank(const StructureTensor& mu, double tol) {
  const int n = mu.dim();
  CMat gen(n, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k) gen(k, a * n + b) = mu(a, b, k);
  return numerical_rank(gen, tol).rank;
}

std::optional<CVec> unit_element(const StructureTensor& mu) {
  const int n = mu.dim();
  CMat S(n * n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) S(k * n + j, i) = mu(i, j, k);
  CVec rhs = CVec::Zero(n * n);
  for (int i = 0; i < n; ++i) rhs(i * n + i) = 1.0;
  CVec u = S.completeOrthogonalDecomposition().solve(rhs);
  if ((S * u - rhs).norm() >= 1e-9 * std::sqrt(static_cast<double>(n))) return std::nullopt;
  return u;
}

bool has_unit(const StructureTensor& mu) { return unit_element(mu).has_value(); }

Subspace centroid(const StructureTensor& mu, double tol) {
  const int n = mu.dim();
  // T(e_a e_b) - T(e_a) e_b = 0, unknowns T_pq at p*n+q.
  CMat C = CMat::Zero(n * n * n, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k) {
        const int row = (a * n + b) * n + k;
        for (int l = 0; l < n; ++l) {
          C(row, k * n + l) += mu(a, b, l);
          C(row, l * n + a) -= mu(l, b, k);
        }
      }
  return kernel(C, tol);
}

bool is_decomposable(const StructureTensor& mu) {
  const int n = mu.dim();
  if (n == 1) return false;
  Subspace G = centroid(mu);
  if (G.dim() <= 1) return false;
  // Local centroid iff every element minus its scalar part is nilpotent.
  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int trial = 0; trial < 3; ++trial) {
    CVec coef(G.dim());
    for (int c = 0; c < G.dim(); ++c) coef(c) = cd(g(rng), g(rng));
    CVec t = G.basis * coef;
    CMat T(n, n);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) T(p, q) = t(p * n + q);
    CMat X = T - (T.trace() / static_cast<double>(n)) * CMat::Identity(n, n);
    const double xn = X.norm();
    if (xn == 0.0) continue;
    X /= xn;
    CMat Xp = X;
    for (int p = 1; p < n; ++p) Xp = Xp * X;
    if (Xp.norm() > 1e-6) return true;
  }
  return false;
}

bool is_simple(const StructureTensor& mu) { return is_semisimple(mu) && centroid(mu).dim() == 1; }

StructureTensor act(const CMat& g, const StructureTensor& mu) {
  const int n = mu.dim();
  if (g.rows() != n || g.cols() != n) throw JordanError("group element has wrong size");
  Eigen::FullPivLU<CMat> lu(g);
  if (!lu.isInvertible()) throw JordanError("group element is singular");
  const CMat gi = lu.inverse();
  const auto& m = mu.raw();
  auto at = [n](int i, int j, int k) { return (i * n + j) * n + k; };
  std::vector<cd> t1(m.size()), t2(m.size());
  for (int a = 0; a < n; ++a)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        cd s = 0;
        for (int b = 0; b < n; ++b) s += gi(b, j) * m[at(a, b, l)];
        t1[at(a, j, l)] = s;
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        cd s = 0;
        for (int a = 0; a < n; ++a) s += gi(a, i) * t1[at(a, j, l)];
        t2[at(i, j, l)] = s;
      }
  StructureTensor out(n);
  auto& o = out.raw();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        cd s = 0;
        for (int l = 0; l < n; ++l) s += g(k, l) * t2[at(i, j, l)];
        o[at(i, j, k)] = s;
      }
  // Restore exact symmetry lost to rounding in the staged contraction.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const cd v = 0.5 * (o[at(i, j, k)] + o[at(j, i, k)]);
        o[at(i, j, k)] = v;
        o[at(j, i, k)] = v;
      }
  return out;
}

StructureTensor inf_act(const CMat& A, const StructureTensor& mu) {
  const int n = mu.dim();
  if (A.rows() != n || A.cols() != n) throw JordanError("matrix has wrong size");
  StructureTensor out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        cd s = 0;
        for (int l = 0; l < n; ++l)
          s += A(k, l) * mu(i, j, l) - A(l, i) * mu(l, j, k) - A(l, j) * mu(i, l, k);
        out.set(i, j, k, s);
      }
  return out;
}

StructureTensor permute(const StructureTensor& mu, const std::vector<int>& perm) {
  const int n = mu.dim();
  if (static_cast<int>(perm.size()) != n) throw JordanError("permutation has wrong length");
  StructureTensor out(n);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      for (int c = 0; c < n; ++c) out.set(a, b, c, mu(perm[a], perm[b], perm[c]));
  return out;
}

StructureTensor direct_product(const StructureTensor& mu, const StructureTensor& nu) {
  const int n = mu.dim(), m = nu.dim();
  StructureTensor out(n + m);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k) out.set(i, j, k, mu(i, j, k));
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j)
      for (int k = 0; k < m; ++k) out.set(n + i, n + j, n + k, nu(i, j, k));
  return out;
}

double soliton_constant(const StructureTensor& mu) {
  const double nn = mu.norm_sq();
  if (nn == 0.0) throw JordanError("zero tensor");
  return -mat_norm_sq(moment_matrix(mu)) / nn;
}

StructureTensor soliton_product(const StructureTensor& mu, const StructureTensor& nu) {
  const double c = std::sqrt(soliton_constant(mu) / soliton_constant(nu));
  return direct_product(mu, cd(c) * nu);
}

StructureTensor adjoin_unit(const StructureTensor& mu) {
  if (has_unit(mu)) throw JordanError("algebra already has a unit element");
  const int n = mu.dim();
  StructureTensor out(n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k) out.set(i, j, k, mu(i, j, k));
  out.set(n, n, n, 1.0);
  for (int i = 0; i < n; ++i) out.set(i, n, i, 1.0);
  return out;
}

StructureTensor soliton_unitalize(const StructureTensor& mu) {
  const int n = mu.dim();
  const double c = (2.0 * n + 1.0) / (-soliton_constant(mu));
  const StructureTensor scaled = cd(std::sqrt(c)) * mu;
  StructureTensor out = adjoin_unit(scaled);
  // M of the unitalization is diag(M_scaled, -(2n+1)).
  CMat expect = CMat::Zero(n + 1, n + 1);
  expect.topLeftCorner(n, n) = moment_matrix(scaled);
  expect(n, n) = -(2.0 * n + 1.0);
  if ((moment_matrix(out) - expect).norm() > 1e-8 * expect.norm())
    throw JordanError("unitalization moment matrix is not block diagonal; input is not a soliton");
  return out;
}

StructureTensor regular_representation(const StructureTensor& mu) {
  const int n = mu.dim();
  StructureTensor out(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k) out.set(i, j, k, mu(i, j, k));
  for (int s = 0; s < n; ++s)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) out.set(s, n + j, n + k, mu(s, j, k));
  return out;
}

}  // namespace jordan

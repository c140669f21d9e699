#include <doctest.h>

#include <random>

#include "jordan/algebra.hpp"
#include "jordan/catalog.hpp"
#include "jordan/moment.hpp"
#include "jordan/stratify.hpp"
#include "support.hpp"

using namespace jordan;
using testing::diag;
using testing::random_tensor;

TEST_CASE("moment matrix agrees with the pairing oracle") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 5; ++n) {
    const StructureTensor mu = random_tensor(n, rng);
    CHECK((moment_matrix(mu) - testing::oracle_moment(mu)).norm() < 1e-12 * mu.norm_sq());
  }
  for (const CatalogEntry* e : catalog_dim(0))
    CHECK_MESSAGE((moment_matrix(e->tensor) - testing::oracle_moment(e->tensor)).norm() < 1e-12, e->name);
}

TEST_CASE("moment matrix examples") {
  CHECK((moment_matrix(heisenberg(2)) - diag({-2, 1})).norm() < 1e-15);
  CHECK((moment_matrix(hyperbolic(2)) - diag({-1.5, 0})).norm() < 1e-15);
  CHECK((moment_matrix(builtin("A_1_1").tensor) - diag({-1})).norm() < 1e-15);
  CHECK_THROWS_AS(moment_matrix(zero_tensor(3)), JordanError);
}

TEST_CASE("trace, hermiticity and the energy lower bound") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 20; ++t) {
    const int n = 1 + t % 5;
    const StructureTensor mu = random_tensor(n, rng);
    const CMat M = moment_matrix(mu);
    CHECK(std::abs(M.trace() + mu.norm_sq()) < 1e-9 * mu.norm_sq());
    CHECK(is_hermitian(M, 1e-12 * mu.norm_sq()));
    CHECK(energy(mu) >= 1.0 / n - 1e-12);
  }
}

TEST_CASE("definitional pairing Tr(M A) = <A.mu, mu>") {
  std::mt19937_64 rng(13);
  const StructureTensor mu = random_tensor(4, rng);
  const CMat M = moment_matrix(mu);
  for (int t = 0; t < 20; ++t) {
    const CMat A = random_hermitian(4, rng);
    const cd lhs = inf_act(A, mu).inner(mu);
    CHECK(std::abs(lhs - (M * A).trace()) <= 1e-9 * mu.norm_sq() * A.norm());
  }
}

TEST_CASE("energy values and scale invariance") {
  for (int n = 2; n <= 8; ++n) CHECK(energy(heisenberg(n)) == doctest::Approx(5.0).epsilon(1e-14));
  for (int n = 2; n <= 6; ++n) CHECK(energy(hyperbolic(n)) == doctest::Approx(1.0).epsilon(1e-14));
  std::mt19937_64 rng(14);
  const StructureTensor mu = random_tensor(3, rng);
  CHECK(std::abs(energy(cd(-2.5, 0.7) * mu) - energy(mu)) < 1e-12);
}

TEST_CASE("gradient matches central differences") {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 10; ++t) {
    const int n = 2 + t % 3;
    const StructureTensor mu = random_tensor(n, rng).normalized();
    const StructureTensor xi = random_tensor(n, rng).normalized();
    const double h = 1e-5;
    const double fd = (energy(mu + h * xi) - energy(mu - h * xi)) / (2 * h);
    CHECK(std::abs(fd - energy_gradient(mu).inner(xi).real()) < 1e-6);
  }
}

TEST_CASE("gradient vanishes on catalog solitons") {
  for (const CatalogEntry* e : testing::solitons()) {
    const StructureTensor mu = refined_tensor(*e).normalized();
    CHECK_MESSAGE(energy_gradient(mu).norm() <= 1e-8, e->name);
  }
}

TEST_CASE("soliton check") {
  for (const CatalogEntry* e : catalog_dim(0)) {
    const MomentReport r = soliton_check(refined_tensor(*e));
    CHECK_MESSAGE(r.is_soliton == e->distinguished, e->name);
    CHECK_MESSAGE(r.derivation_pairing < 1e-8, e->name);
    CHECK((r.M - (r.c * CMat::Identity(e->dim, e->dim) + r.D)).norm() < 1e-12);
  }
  std::mt19937_64 rng(16);
  const StructureTensor moved = act(random_group_element(3, rng), builtin("A_3_10").tensor);
  const MomentReport r = soliton_check(moved);
  CHECK_FALSE(r.is_soliton);
  CHECK(r.soliton_residual > 1e-4);
  // the Heisenberg orbit is a single U(n) x C* orbit, so every point stays critical
  for (int n = 2; n <= 5; ++n) {
    const StructureTensor h = act(random_group_element(n, rng), heisenberg(n));
    CHECK(soliton_check(h).is_soliton);
    CHECK(energy(h) == doctest::Approx(5.0).epsilon(1e-10));
  }

  // lambda family with a = 0, b = c = 1, d = 0: n1 n2 = n3, n1 n3 = n4
  StructureTensor lam(4);
  lam.set(0, 1, 2, 1.0);
  lam.set(0, 2, 3, 1.0);
  const MomentReport rl = soliton_check(lam);
  CHECK((rl.M - diag({-4, -2, 0, 2})).norm() < 1e-14);
  CHECK(rl.is_soliton);
}

TEST_CASE("soliton types") {
  const SolitonType h = soliton_type(heisenberg(2));
  CHECK(h.str() == "(1<2;1,1)");
  CHECK(h.beta == std::vector<Fraction>{Fraction(-2), Fraction(1)});
  CHECK(h.energy == Fraction(5));
  const SolitonType a37 = soliton_type(builtin("A_3_7").tensor);
  CHECK(a37.str() == "(0<1<2;1,1,1)");
  CHECK(a37.beta == std::vector<Fraction>{Fraction(-5, 6), Fraction(-1, 3), Fraction(1, 6)});
  CHECK(a37.energy == Fraction(5, 6));
  const SolitonType ss = soliton_type(builtin("A_2_4").tensor);
  CHECK(ss.str() == "(0;2)");
  CHECK(ss.energy == Fraction(1, 2));
  CHECK(type_from_beta({Fraction(-1, 3), Fraction(-1, 3), Fraction(-1, 3)}).str() == "(0;3)");
  for (const CatalogEntry* e : testing::solitons()) {
    const SolitonType t = soliton_type(refined_tensor(*e));
    Fraction sum;
    for (std::size_t i = 0; i < t.beta.size(); ++i) sum = sum + t.beta[i];
    CHECK(sum == Fraction(-1));
    int m = 0;
    for (int x : t.mult) m += x;
    CHECK(m == e->dim);
  }
}

TEST_CASE("sl residual") {
  CHECK(sl_residual(builtin("A_3_1").tensor) < 1e-12);
  CHECK(sl_residual(builtin("A_3_2").tensor) < 1e-12);
  // m(heis(2)) = diag(-2, 1), so m + I/2 = diag(-3/2, 3/2)
  CHECK(sl_residual(heisenberg(2)) == doctest::Approx(1.5 * std::sqrt(2.0)));
  std::mt19937_64 rng(17);
  for (int n = 2; n <= 5; ++n) {
    const StructureTensor mu = random_tensor(n, rng);
    const CMat m = moment_matrix(mu) / mu.norm_sq();
    const double brute = (m + CMat::Identity(n, n) / double(n)).norm();
    CHECK(sl_residual(mu) == doctest::Approx(brute).epsilon(1e-12));
  }
}

TEST_CASE("moment matrix is unitarily equivariant") {
  std::mt19937_64 rng(18);
  for (int t = 0; t < 10; ++t) {
    const StructureTensor mu = random_tensor(4, rng);
    const CMat k = random_unitary(4, rng);
    CHECK((moment_matrix(act(k, mu)) - k * moment_matrix(mu) * k.adjoint()).norm() < 1e-9 * mu.norm_sq());
  }
}

TEST_CASE("diagonal moment matrices split into weight contributions") {
  for (const CatalogEntry* e : catalog_dim(0)) {
    const StructureTensor& mu = e->tensor;
    const int n = e->dim;
    RVec sum = RVec::Zero(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          RVec alpha = RVec::Zero(n);
          alpha(i) -= 1;
          alpha(j) -= 1;
          alpha(k) += 1;
          sum += (i < j ? 2.0 : 1.0) * std::norm(mu(i, j, k)) * alpha;
        }
    const CMat M = moment_matrix(mu);
    CMat off = M;
    off.diagonal().setZero();
    if (off.norm() > 1e-12) continue;  // A_4_53 is not diagonal in its table basis
    CHECK_MESSAGE((M.diagonal().real() - sum).norm() < 1e-9, e->name);
  }
}

TEST_CASE("derivations are orthogonal to M") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 10; ++t) {
    const StructureTensor mu = testing::random_jordan(rng, 4);
    const CMat M = moment_matrix(mu);
    for (const CMat& D : derivation_algebra(mu).basis) CHECK(std::abs(mat_inner(M, D)) < 1e-8 * M.norm());
  }
}

TEST_CASE("eigenvector identities on solitons") {
  for (const char* name : {"A_3_7", "A_4_38", "A_4_53", "A_4_62", "A_4_66"}) {
    const StructureTensor mu = builtin(name).tensor.normalized();
    const MomentReport r = soliton_check(mu);
    Eigen::SelfAdjointEigenSolver<CMat> es(r.D);
    const int n = mu.dim();
    for (int a = 0; a < n; ++a) {
      const CMat La = left_mult(mu, es.eigenvectors().col(a));
      const double d = es.eigenvalues()(a);
      const double lhs = d * mat_norm_sq(La);
      const double rhs = inf_act(La.adjoint(), mu).norm_sq() - inf_act(La, mu).norm_sq();
      CHECK_MESSAGE(std::abs(lhs - rhs) < 1e-8, name);
      for (int b = 0; b < n; ++b) {
        if (std::abs(es.eigenvalues()(b) - d) < 1e-6) continue;
        const CMat Lb = left_mult(mu, es.eigenvectors().col(b));
        CHECK_MESSAGE(std::abs(mat_inner(La, Lb)) < 1e-8, name);
      }
    }
  }
}

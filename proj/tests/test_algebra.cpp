#include <doctest.h>

#include <random>

#include "jordan/algebra.hpp"
#include "jordan/catalog.hpp"
#include "jordan/moment.hpp"
#include "support.hpp"

using namespace jordan;
using testing::random_tensor;

namespace {

CVec vec(std::initializer_list<cd> v) {
  CVec x(v.size());
  int i = 0;
  for (cd c : v) x(i++) = c;
  return x;
}

}  // namespace

TEST_CASE("norm counts off-diagonal products twice and packing is an isometry") {
  StructureTensor mu(2);
  mu.set(0, 1, 0, 1.0);
  CHECK(mu.norm_sq() == doctest::Approx(2.0));
  CHECK(mu(1, 0, 0) == cd(1.0));
  std::mt19937_64 rng(1);
  const StructureTensor r = random_tensor(4, rng);
  CHECK(r.packed().norm() == doctest::Approx(r.norm()).epsilon(1e-14));
  CHECK(distance(StructureTensor::from_packed(4, r.packed()), r) < 1e-14);
  CHECK_THROWS_AS(StructureTensor(0), JordanError);
}

TEST_CASE("evaluate on the two model families") {
  const StructureTensor heis = heisenberg(2), hyp = hyperbolic(2);
  CHECK((evaluate(heis, vec({1, 0}), vec({1, 0})) - vec({0, 1})).norm() == 0.0);
  CHECK((evaluate(hyp, vec({1, 0}), vec({0, 1})) - vec({0, 0.5})).norm() == 0.0);
  CHECK(evaluate(heis, vec({0, 0}), vec({cd(2, 1), 3})).norm() == 0.0);
  CHECK_THROWS_AS(evaluate(heis, vec({1, 0, 0}), vec({1, 0})), JordanError);
}

TEST_CASE("evaluate is bilinear and symmetric") {
  std::mt19937_64 rng(2);
  const StructureTensor mu = random_tensor(3, rng);
  const CVec x = CVec::Random(3), y = CVec::Random(3), z = CVec::Random(3);
  const cd a(0.3, -1.2), b(2.0, 0.5);
  CHECK((evaluate(mu, x, y) - evaluate(mu, y, x)).norm() < 1e-13);
  CHECK((evaluate(mu, a * x + b * z, y) - a * evaluate(mu, x, y) - b * evaluate(mu, z, y)).norm() < 1e-12);
}

TEST_CASE("left multiplication examples") {
  CHECK((left_mult(hyperbolic(2), vec({1, 0})) - testing::diag({1, 0.5})).norm() == 0.0);
  CHECK(left_mult(heisenberg(2), vec({0, 1})).norm() == 0.0);
  CMat expect = CMat::Zero(2, 2);
  expect(1, 0) = 1.0;
  CHECK((left_mult(heisenberg(2), vec({1, 0})) - expect).norm() == 0.0);
}

TEST_CASE("jordan defect against brute-force evaluation") {
  CHECK(jordan_defect(heisenberg(5)) == 0.0);
  // e2 unital with idempotent e1: still Jordan
  StructureTensor split(2);
  split.set(0, 1, 0, 1.0);
  split.set(1, 1, 1, 1.0);
  split.set(0, 0, 0, 1.0);
  CHECK(jordan_defect(split) == 0.0);
  CHECK(testing::oracle_jordan_defect(split) == 0.0);
  // e1 e2 = e1, e1^2 = e2
  StructureTensor bad(2);
  bad.set(0, 1, 0, 1.0);
  bad.set(0, 0, 1, 1.0);
  CHECK(jordan_defect(bad) > 0.1);
  CHECK(jordan_defect(bad) == doctest::Approx(testing::oracle_jordan_defect(bad)));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 5; ++t) {
    const StructureTensor mu = random_tensor(3, rng);
    CHECK(jordan_defect(mu) == doctest::Approx(testing::oracle_jordan_defect(mu)).epsilon(1e-12));
    CHECK_FALSE(is_jordan(mu));
  }
}

TEST_CASE("Jordan identity is invariant under the group action") {
  std::mt19937_64 rng(4);
  for (const char* name : {"A_3_2", "A_3_10", "A_4_53", "A_4_63", "A_4_66"}) {
    const StructureTensor mu = builtin(name).tensor;
    const StructureTensor g_mu = act(random_group_element(mu.dim(), rng), mu);
    CHECK(is_jordan(g_mu));
  }
}

TEST_CASE("trace form and radical") {
  CHECK((trace_form(builtin("A_2_4").tensor) - testing::diag({1, 1})).norm() < 1e-15);
  CHECK(trace_form(heisenberg(2)).norm() == 0.0);
  CHECK((trace_form(builtin("A_2_2").tensor) - testing::diag({1.5, 0})).norm() < 1e-15);

  CHECK(radical(builtin("A_2_4").tensor).dim() == 0);
  CHECK(is_semisimple(builtin("A_2_4").tensor));
  CHECK(radical(heisenberg(4)).dim() == 4);
  const Subspace rad = radical(builtin("A_2_5").tensor);
  REQUIRE(rad.dim() == 1);
  CHECK(rad.residual(vec({0, 1})) < 1e-12);
  CHECK_FALSE(rad.borderline());
}

TEST_CASE("the radical is an ideal for every catalog entry") {
  for (const CatalogEntry* e : catalog_dim(0)) {
    const StructureTensor mu = refined_tensor(*e);
    const Subspace rad = radical(mu);
    CHECK_MESSAGE(!rad.borderline(), e->name);
    for (int r = 0; r < rad.dim(); ++r)
      for (int i = 0; i < e->dim; ++i)
        CHECK_MESSAGE(rad.residual(evaluate(mu, basis_vector(e->dim, i), rad.basis.col(r))) < 1e-9, e->name);
  }
}

TEST_CASE("derivation algebra dimensions") {
  for (int n = 2; n <= 5; ++n) {
    CHECK(derivation_algebra(hyperbolic(n)).dim == n * n - n);
    CHECK(derivation_algebra(heisenberg(n)).dim == n * n - 2 * n + 2);
    CHECK(derivation_algebra(zero_tensor(n)).dim == n * n);
  }
  for (const char* name : {"A_3_7", "A_4_2", "A_4_53", "A_4_63"}) {
    const StructureTensor mu = builtin(name).tensor;
    const Derivations der = derivation_algebra(mu);
    CHECK(der.gap_ratio > kGapWarn);
    for (const CMat& D : der.basis) CHECK(inf_act(D, mu).norm() <= 1e-9 * mu.norm());
    for (std::size_t a = 0; a < der.basis.size(); ++a)
      for (std::size_t b = 0; b < der.basis.size(); ++b)
        CHECK(std::abs(mat_inner(der.basis[a], der.basis[b]) - (a == b ? 1.0 : 0.0)) < 1e-10);
  }
}

TEST_CASE("annihilator") {
  const Subspace ann = annihilator(heisenberg(3));
  REQUIRE(ann.dim() == 2);
  CHECK(ann.residual(vec({0, 1, 0})) < 1e-12);
  CHECK(ann.residual(vec({0, 0, 1})) < 1e-12);
  CHECK(annihilator(builtin("A_2_4").tensor).dim() == 0);
  CHECK(annihilator(hyperbolic(4)).dim() == 0);
}

TEST_CASE("power chains and product rank") {
  const PowerChain p63 = power_dims(builtin("A_4_63").tensor);
  CHECK(p63.dims == std::vector<int>{4, 2, 1, 0});
  CHECK(p63.nilpotent);
  CHECK(power_dims(heisenberg(5)).dims == std::vector<int>{5, 1, 0});
  const PowerChain p64 = power_dims(builtin("A_4_64").tensor);
  CHECK(p64.dims == std::vector<int>{4, 2, 1, 0});
  // Product rank does not separate the two; dim Der does.
  CHECK(product_rank(builtin("A_4_63").tensor) == 2);
  CHECK(product_rank(builtin("A_4_64").tensor) == 2);
  CHECK(derivation_algebra(builtin("A_4_63").tensor).dim != derivation_algebra(builtin("A_4_64").tensor).dim);
  CHECK_FALSE(power_dims(builtin("A_3_2").tensor).nilpotent);
  CHECK(power_dims(builtin("A_3_2").tensor).dims == std::vector<int>{3});
  CHECK(product_rank(hyperbolic(4)) == 4);
}

TEST_CASE("act matches its definition and composes") {
  std::mt19937_64 rng(5);
  const StructureTensor mu = random_tensor(3, rng);
  CHECK(distance(act(CMat::Identity(3, 3), mu), mu) < 1e-14);
  const CMat g = random_group_element(3, rng), h = random_group_element(3, rng);
  const StructureTensor gm = act(g, mu);
  const CVec x = CVec::Random(3), y = CVec::Random(3);
  const CMat gi = g.inverse();
  CHECK((evaluate(gm, x, y) - g * evaluate(mu, gi * x, gi * y)).norm() < 1e-10 * mu.norm());
  CHECK(distance(act(g, act(h, mu)), act(g * h, mu)) < 1e-10 * mu.norm());
  CHECK(distance(act(g, act(gi, mu)), mu) < 1e-10 * mu.norm());
  const CMat k = random_unitary(3, rng);
  CHECK(act(k, mu).norm() == doctest::Approx(mu.norm()).epsilon(1e-12));
  CHECK_THROWS_AS(act(CMat::Zero(3, 3), mu), JordanError);
}

TEST_CASE("inf_act is the derivative of act") {
  std::mt19937_64 rng(6);
  const StructureTensor mu = random_tensor(3, rng);
  CHECK(distance(inf_act(CMat::Identity(3, 3), mu), -1.0 * mu) < 1e-14);
  const CMat A = random_complex(3, rng);
  const double h = 1e-5;
  const CMat I = CMat::Identity(3, 3);
  // exp(hA) to second order is enough for a central difference
  auto ex = [&](double s) { return CMat(I + s * A + 0.5 * s * s * A * A); };
  StructureTensor fd = act(ex(h), mu) - act(ex(-h), mu);
  fd *= 1.0 / (2 * h);
  CHECK(distance(fd, inf_act(A, mu)) < 1e-6 * mu.norm() * A.norm());
}

TEST_CASE("action operator columns are inf_act of matrix units") {
  std::mt19937_64 rng(7);
  const StructureTensor mu = random_tensor(3, rng);
  const CMat op = action_operator(mu);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      CMat E = CMat::Zero(3, 3);
      E(a, b) = 1.0;
      CHECK((op.col(a * 3 + b) - inf_act(E, mu).packed()).norm() < 1e-13);
    }
}

TEST_CASE("direct and soliton products") {
  const StructureTensor a11 = builtin("A_1_1").tensor;
  CHECK(distance(direct_product(a11, a11), builtin("A_2_4").tensor) == 0.0);
  CHECK(distance(direct_product(a11, zero_tensor(1)), builtin("A_2_5").tensor) == 0.0);
  // A_2_3 x c A_1_1 lands in basis n1 n2 e1; A_3_15 lists e1 first
  const StructureTensor p = soliton_product(builtin("A_2_3").tensor, a11);
  CHECK(distance(permute(p, {2, 0, 1}), builtin("A_3_15").tensor) < 1e-12);
  CHECK(soliton_check(p).is_soliton);
}

TEST_CASE("unit elements and unitalization") {
  CHECK(has_unit(builtin("A_2_4").tensor));
  CHECK_FALSE(has_unit(builtin("A_2_3").tensor));
  CHECK_THROWS_AS(adjoin_unit(builtin("A_2_4").tensor), JordanError);
  const auto u = unit_element(builtin("A_3_7").tensor);
  REQUIRE(u.has_value());
  CHECK((*u - vec({1, 0, 0})).norm() < 1e-12);

  for (int n = 1; n <= 4; ++n) {
    const CMat M = moment_matrix(adjoin_unit(zero_tensor(n)));
    CHECK(M(n, n).real() == doctest::Approx(-(2.0 * n + 1)));
  }

  const StructureTensor hat = soliton_unitalize(builtin("A_2_3").tensor);
  CHECK(energy(hat) == doctest::Approx(5.0 / 6.0).epsilon(1e-12));
  CHECK(distance(permute(hat, {2, 0, 1}), builtin("A_3_7").tensor) < 1e-9);
  CHECK(is_jordan(hat));
}

TEST_CASE("regular representation of A_2_4 is A_4_22 exactly") {
  const StructureTensor reg = regular_representation(builtin("A_2_4").tensor);
  CHECK(distance(reg, builtin("A_4_22").tensor) < 1e-15);
  CHECK(is_jordan(reg));
  // Not a scalar moment matrix: the nilpotent half carries weight 0.
  CHECK((moment_matrix(reg) - testing::diag({-3, -3, 0, 0})).norm() < 1e-12);
}

TEST_CASE("centroid, simplicity and decomposability") {
  CHECK(is_simple(builtin("A_3_2").tensor));
  CHECK_FALSE(is_simple(builtin("A_3_1").tensor));
  CHECK(is_decomposable(builtin("A_2_4").tensor));
  CHECK_FALSE(is_decomposable(builtin("A_3_7").tensor));
  CHECK(centroid(builtin("A_3_1").tensor).dim() == 3);
  // decomposability is a property of the algebra, not the basis
  std::mt19937_64 rng(8);
  for (const char* name : {"A_4_13", "A_4_63", "A_4_72", "A_3_2"}) {
    const StructureTensor mu = builtin(name).tensor;
    CHECK(is_decomposable(act(random_group_element(mu.dim(), rng), mu)) == is_decomposable(mu));
  }
}

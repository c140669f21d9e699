#include <doctest.h>

#include <random>

#include "jordan/algebra.hpp"
#include "jordan/catalog.hpp"
#include "jordan/parallel.hpp"
#include "support.hpp"

using namespace jordan;

TEST_CASE("batch soliton check matches the serial reference") {
  std::vector<StructureTensor> mus;
  for (const CatalogEntry& e : catalog()) mus.push_back(e.tensor);
  std::mt19937_64 rng(51);
  for (int t = 0; t < 20; ++t) mus.push_back(testing::random_tensor(1 + t % 4, rng));
  const auto par = batch_soliton_check(mus, kSolitonTol, 3);
  const auto ser = batch_soliton_check_serial(mus);
  REQUIRE(par.size() == ser.size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    CHECK(par[i].is_soliton == ser[i].is_soliton);
    CHECK(par[i].soliton_residual == ser[i].soliton_residual);
    CHECK((par[i].M - ser[i].M).norm() == 0.0);
  }
}

TEST_CASE("batch flow matches the serial reference") {
  std::mt19937_64 rng(52);
  std::vector<StructureTensor> mus;
  for (int t = 0; t < 6; ++t) mus.push_back(testing::random_jordan(rng, 3));
  const FlowOptions o;
  const auto par = batch_flow(mus, o, 2);
  const auto ser = batch_flow_serial(mus, o);
  for (std::size_t i = 0; i < mus.size(); ++i) {
    CHECK(par[i].energies == ser[i].energies);
    CHECK(distance(par[i].terminal, ser[i].terminal) == 0.0);
  }
}

TEST_CASE("parallel Jordan defect equals the serial one") {
  std::mt19937_64 rng(53);
  for (int n = 1; n <= 6; ++n) {
    const StructureTensor mu = testing::random_tensor(n, rng);
    CHECK(jordan_defect_parallel(mu, 4) == doctest::Approx(jordan_defect(mu)).epsilon(1e-12));
  }
  for (const CatalogEntry* e : catalog_dim(4)) CHECK(jordan_defect_parallel(e->tensor) < 1e-9);
}

TEST_CASE("table reproduction is independent of the worker count") {
  const ReproReport a = reproduce_tables(3, 1), b = reproduce_tables(3, 4);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].name == b.rows[i].name);
    CHECK(a.rows[i].residual == b.rows[i].residual);
    CHECK(a.rows[i].pass == b.rows[i].pass);
  }
  CHECK(max_threads() >= 1);
}

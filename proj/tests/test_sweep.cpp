#include <doctest.h>
#include <omp.h>

#include <cmath>
#include <numeric>

#include "polmax/degree.hpp"
#include "polmax/sweep.hpp"

using namespace polmax;
using doctest::Approx;

TEST_CASE("nbar_grid") {
  const auto g = nbar_grid(0.2, 9.0, 0.2);
  REQUIRE(g.size() == 45);
  CHECK(g[14] == 3.0);
  CHECK(g.back() == 9.0);
  CHECK(nbar_grid(1.0, 1.0, 0.5) == std::vector<double>{1.0});
  CHECK(nbar_grid(0.0, 1.0, 0.3).size() == 4);
  CHECK_THROWS_AS(nbar_grid(2.0, 1.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(nbar_grid(0.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(nbar_grid(-1.0, 1.0, 0.1), std::invalid_argument);
}

TEST_CASE("sweep records") {
  SUBCASE("nbar = 1") {
    const auto r = evaluate_sweep_point(1.0);
    CHECK(r.degree_optimal == Approx(0.8).epsilon(1e-13));
    CHECK(r.support_size == 3);
  }
  SUBCASE("nbar = 5 ordering") {
    const auto r = evaluate_sweep_point(5.0);
    CHECK(r.degree_optimal > r.degree_coherent);
    CHECK(r.degree_coherent > degree_pure_n_photon(5).value);
    CHECK(degree_pure_n_photon(5).value == Approx(0.8333333333333334));
  }
  SUBCASE("vacuum") {
    const auto r = evaluate_sweep_point(0.0);
    CHECK(r.degree_optimal == 0.0);
    CHECK(r.degree_coherent == 0.0);
    CHECK(r.degree_thermal == 0.0);
    CHECK(r.degree_twin_exact == 0.0);
    CHECK(r.support_size == 1);
  }
}

TEST_CASE("the optimum dominates every catalog state on a grid") {
  for (const auto& r : sweep_serial(nbar_grid(0.0, 25.0, 0.25))) {
    CAPTURE(r.nbar);
    CHECK(r.degree_optimal >= r.degree_coherent);
    CHECK(r.degree_optimal >= r.degree_thermal);
    CHECK(r.degree_optimal >= r.degree_twin_exact);
    for (double d : {r.degree_optimal, r.degree_coherent, r.degree_thermal, r.degree_twin_exact}) {
      CHECK(d >= 0.0);
      CHECK(d < 1.0);
    }
  }
}

TEST_CASE("parallel sweep is bit-identical to the serial reference") {
  const auto grid = nbar_grid(0.0, 30.0, 0.1);
  const auto serial = sweep_serial(grid);
  for (int threads : {1, 3, 8}) {
    omp_set_num_threads(threads);
    CHECK(sweep_parallel(grid) == serial);
  }
}

TEST_CASE("figure rows") {
  SUBCASE("fig1") {
    const auto rows = figure1_rows();
    REQUIRE(rows.size() == 25);
    for (int i = 0; i < 5; ++i) {
      double s = 0.0;
      for (int n = 0; n < 5; ++n) s += rows[static_cast<std::size_t>(5 * i + n)].p;
      CHECK(std::abs(s - 1.0) <= 1e-10);
    }
    CHECK(rows.front().nbar == 0.2);
    CHECK(rows.back().nbar == 1.0);
  }
  SUBCASE("fig2") {
    const auto rows = figure2_rows();
    REQUIRE(rows.size() == 45);
    CHECK(rows[14].nbar == 3.0);
    CHECK(std::abs(rows[14].q) <= 1e-9);
    // linear growth between integer means
    for (const auto& r : rows) {
      if (r.nbar == std::floor(r.nbar)) CHECK(std::abs(r.q - (r.nbar - 3.0) / 5.0) <= 1e-9);
    }
  }
  SUBCASE("fig3") {
    const auto rows = figure3_rows();
    REQUIRE(rows.size() == 9 * 26);
    CHECK(rows[1].nbar == 1.0);
    CHECK(rows[1].n == 1);
    CHECK(rows[1].p == Approx(0.4).epsilon(1e-12));
  }
}

#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "polmax/degree.hpp"
#include "polmax/distributions.hpp"

using namespace polmax;
using doctest::Approx;

TEST_CASE("hs_degree on point masses and Poisson") {
  CHECK(hs_degree(delta_distribution(1)).value == 0.5);
  CHECK(hs_degree(delta_distribution(0)).value == 0.0);

  const auto r = hs_degree(poisson_distribution(1.0, 60));
  CHECK(r.method == DegreeMethod::Series);
  CHECK(r.truncation_dim == 60);
  CHECK(r.value == Approx(0.784730710751062341).epsilon(1e-13));

  // tail of the sum is bounded by tail_bound^2
  const auto coarse = poisson_distribution(1.0, 2);
  const auto rc = hs_degree(coarse);
  CHECK(rc.tail_bound == Approx(coarse.tail_bound * coarse.tail_bound));
  CHECK(rc.value - 0.784730710751062341 >= 0.0);
  CHECK(rc.value - 0.784730710751062341 <= rc.tail_bound);

  for (int n = 0; n <= 50; ++n) {
    CHECK(std::abs(hs_degree(delta_distribution(n)).value - degree_pure_n_photon(n).value) <=
          1e-15);
  }
}

TEST_CASE("hs_degree purity handling") {
  const auto d = delta_distribution(3);
  CHECK(hs_degree(d, 0.5).value == Approx(0.25));
  CHECK_THROWS_AS(hs_degree(d, 0.0), std::domain_error);
  CHECK_THROWS_AS(hs_degree(d, 1.5), std::domain_error);
  // a purity below that of the twirled state is unphysical
  CHECK_THROWS_AS(hs_degree(d, 0.1), std::domain_error);
}

TEST_CASE("degree_pure_n_photon") {
  CHECK(degree_pure_n_photon(0).value == 0.0);
  CHECK(degree_pure_n_photon(1).value == 0.5);
  CHECK(degree_pure_n_photon(99).value == Approx(0.99).epsilon(1e-15));
  CHECK(degree_pure_n_photon(1).method == DegreeMethod::ClosedForm);
  CHECK_THROWS_AS(degree_pure_n_photon(-1), std::domain_error);
}

TEST_CASE("degree_coherent_closed_form") {
  CHECK(degree_coherent_closed_form(0.0).value == 0.0);
  CHECK(degree_coherent_closed_form(1.0).value == Approx(0.784730710751062341).epsilon(1e-13));
  CHECK(degree_coherent_closed_form(0.5).value == Approx(0.584179169300583102).epsilon(1e-13));
  CHECK(degree_coherent_closed_form(10.0).value == Approx(0.991249377781671133).epsilon(1e-13));

  const double gap = 1.0 - degree_coherent_closed_form(100.0).value;
  const double asymptote = 1.0 / (2.0 * std::sqrt(M_PI) * 1000.0);
  CHECK(std::abs(gap - asymptote) / asymptote < 0.02);

  CHECK(std::isfinite(degree_coherent_closed_form(1e6).value));
  CHECK(degree_coherent_closed_form(1e6).value < 1.0);
  CHECK_THROWS_AS(degree_coherent_closed_form(-1.0), std::domain_error);
}

TEST_CASE("coherent series matches the Bessel closed form") {
  for (double nbar : {0.5, 1.0, 5.0, 10.0}) {
    CAPTURE(nbar);
    const auto d = poisson_distribution(nbar, certified_dim_poisson(nbar));
    CHECK(std::abs(hs_degree(d).value - degree_coherent_closed_form(nbar).value) <= 1e-10);

    const auto ref = 1.0L - oracle::weighted_square_sum(
                                [nbar](int n) { return oracle::poisson_pmf(nbar, n); }, 400);
    CHECK(std::abs(degree_coherent_closed_form(nbar).value - static_cast<double>(ref)) <= 1e-13);
  }
}

TEST_CASE("optimal_distribution") {
  SUBCASE("nbar = 1") {
    const auto d = optimal_distribution(1.0);
    REQUIRE(d.probs.size() == 3);
    CHECK(d.probs[0] == Approx(0.3).epsilon(1e-15));
    CHECK(d.probs[1] == Approx(0.4).epsilon(1e-15));
    CHECK(d.probs[2] == Approx(0.3).epsilon(1e-15));
    CHECK_FALSE(d.approximate);
  }
  SUBCASE("nbar = 2") {
    const auto d = optimal_distribution(2.0);
    const double expected[] = {5, 8, 9, 8, 5};
    REQUIRE(d.probs.size() == 5);
    for (int n = 0; n < 5; ++n) CHECK(d.probs[n] == Approx(expected[n] / 35.0).epsilon(1e-15));
  }
  SUBCASE("vacuum") { CHECK(optimal_distribution(0.0).probs == std::vector<double>{1.0}); }
  SUBCASE("half-integer means are exact, others are flagged") {
    const auto half = optimal_distribution(2.5);
    CHECK_FALSE(half.approximate);
    CHECK_NOTHROW(validate(half));
    CHECK(optimal_distribution(0.3).approximate);
    CHECK_FALSE(optimal_closed_form_is_exact(1.7));
  }
  SUBCASE("integer means: exact symmetry, normalization, mean") {
    for (int m = 0; m <= 30; ++m) {
      const auto d = optimal_distribution(m);
      CHECK_NOTHROW(validate(d));
      for (int k = 0; k <= m; ++k) CHECK(d.probs[m + k] == d.probs[m - k]);
      CHECK(d.probs.size() == static_cast<std::size_t>(2 * m + 1));
    }
  }
  CHECK_THROWS_AS(optimal_distribution(-1.0), std::domain_error);
}

TEST_CASE("degree_optimal_closed_form") {
  CHECK(degree_optimal_closed_form(0.0).value == 0.0);
  CHECK(degree_optimal_closed_form(1.0).value == Approx(0.8).epsilon(1e-15));
  CHECK(degree_optimal_closed_form(2.0).value == Approx(32.0 / 35.0).epsilon(1e-15));
  CHECK_THROWS_AS(degree_optimal_closed_form(-0.1), std::domain_error);

  for (int m = 0; m <= 20; ++m) {
    CHECK(std::abs(hs_degree(optimal_distribution(m)).value -
                   degree_optimal_closed_form(m).value) <= 1e-12);
  }
  const double scaled = (1.0 - degree_optimal_closed_form(100.0).value) * 4.0 * 1e4 / 3.0;
  CHECK(std::abs(scaled - 1.0) < 0.025);
}

TEST_CASE("Mandel Q of the parabolic optimum is (nbar - 3)/5") {
  for (int m = 1; m <= 30; ++m) {
    CHECK(std::abs(mandel_q(optimal_distribution(m)) - (m - 3.0) / 5.0) <= 1e-12);
  }
}

TEST_CASE("beta22_density") {
  CHECK(beta22_density(0.0, 3.0) == 0.0);
  CHECK(beta22_density(0.5, 10.0) == Approx(0.075).epsilon(1e-15));
  CHECK_THROWS_AS(beta22_density(1.2, 3.0), std::domain_error);

  // continuum limit of the parabola at nbar = 50, away from the endpoints
  const double nbar = 50.0;
  const auto d = optimal_distribution(nbar);
  for (int n = 10; n <= 90; ++n) {
    const double x = n / (2.0 * nbar);
    const double cont = beta22_density(x, nbar);
    CHECK(std::abs(d.probs[n] - cont) / cont < 0.05);
  }
}

TEST_CASE("degree_thermal_series") {
  CHECK(degree_thermal_series(0.0).value == 0.0);
  CHECK(degree_thermal_series(1.0).value == Approx(0.712317927548219073).epsilon(1e-14));
  CHECK(degree_thermal_series(1.0).value == Approx(1.0 + std::log(0.75)).epsilon(1e-15));

  const double gap = 1.0 - degree_thermal_series(100.0).value;
  CHECK(std::abs(gap - std::log(50.0) / 1e4) / (std::log(50.0) / 1e4) < 0.10);

  // tiny means: the limit is 0 and the value is continuous
  CHECK(degree_thermal_series(1e-200).value == Approx(0.0));
  CHECK(degree_thermal_series(1e-6).value > 0.0);

  for (double nbar : {0.05, 0.5, 1.0, 2.4, 5.0, 10.0, 100.0}) {
    CAPTURE(nbar);
    const double mu = nbar / (nbar + 1.0);
    const auto d = thermal_distribution(nbar, certified_dim_geometric(mu));
    CHECK(std::abs(hs_degree(d).value - degree_thermal_series(nbar).value) <= 1e-9);

    const long double mul = nbar / (nbar + 1.0L);
    const auto ref = 1.0L - oracle::weighted_square_sum(
                                [mul](int n) { return oracle::geometric_pmf(mul, n); }, 20000);
    CHECK(std::abs(degree_thermal_series(nbar).value - static_cast<double>(ref)) <= 1e-12);
  }
  CHECK_THROWS_AS(degree_thermal_series(-1.0), std::domain_error);
}

TEST_CASE("degree_twin_beam_exact") {
  CHECK(degree_twin_beam_exact(0.0).value == 0.0);

  const double xi_half = std::atanh(std::sqrt(0.5));
  CHECK(degree_twin_beam_exact(xi_half).value == Approx(0.725346927832972577).epsilon(1e-14));

  // With lambda = nbar/(nbar+2), 1 - P = 2 ln(nbar+1) / (nbar (nbar+2)) exactly.
  for (double nbar : {0.5, 3.0, 100.0, 1e4}) {
    const double gap = 1.0 - degree_twin_beam_exact(twin_beam_squeezing(nbar)).value;
    const double expected = 2.0 * std::log1p(nbar) / (nbar * (nbar + 2.0));
    CHECK(gap == Approx(expected).epsilon(1e-9));
  }

  for (double xi : {0.05, 0.4, xi_half, 1.2, 2.0}) {
    CAPTURE(xi);
    const double lambda = std::tanh(xi) * std::tanh(xi);
    const auto d = twin_beam_distribution(xi, 2 * certified_dim_geometric(lambda));
    CHECK(std::abs(hs_degree(d).value - degree_twin_beam_exact(xi).value) <= 1e-9);
  }
  CHECK_THROWS_AS(degree_twin_beam_exact(-1.0), std::domain_error);
}

TEST_CASE("bures_degree_twin_reference") {
  CHECK(bures_degree_twin_reference(1.0).value == 0.0);
  CHECK(bures_degree_twin_reference(10.0).value == Approx(0.99));
  CHECK(bures_degree_twin_reference(2.0).value == 0.75);
  CHECK_FALSE(bures_degree_twin_reference(2.0).verified);
  CHECK_THROWS_AS(bures_degree_twin_reference(0.0), std::domain_error);
}

TEST_CASE("ordering at equal integer mean: N-photon < coherent < optimal") {
  for (int m = 1; m <= 20; ++m) {
    CAPTURE(m);
    const double pure = degree_pure_n_photon(m).value;
    const double coh = degree_coherent_closed_form(m).value;
    const double opt = degree_optimal_closed_form(m).value;
    CHECK(pure < coh);
    CHECK(coh < opt);
  }
}

TEST_CASE("degree results respect 0 <= value < purity") {
  const StateSpec specs[] = {state::NPhotonPure{4, 1}, state::Su2Coherent{7, 1.0, 2.0},
                             state::QuadratureCoherent{3.3}, state::TwinBeam{0.9},
                             state::ThermalTotal{12.0},
                             state::Custom{custom_distribution({0.2, 0.3, 0.5})}};
  for (const auto& s : specs) {
    const auto r = degree_of(s);
    CHECK(r.value >= 0.0);
    CHECK(r.value < r.purity);
  }
  CHECK(degree_of(state::NPhotonPure{1, 0}).value == 0.5);
  CHECK(degree_of(state::QuadratureCoherent{1.0}).value ==
        degree_coherent_closed_form(1.0).value);
  CHECK(degree_of(state::Custom{custom_distribution({0.0, 1.0})}, 0.9).value == Approx(0.4));
  CHECK_THROWS_AS(degree_of(state::NPhotonPure{1, 2}), std::domain_error);
}

#include <doctest.h>
#include <omp.h>

#include <cmath>
#include <random>
#include <vector>

#include "polmax/kernels.hpp"

using namespace polmax::kernels;

namespace {

std::vector<double> random_probs(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> v(n);
  double s = 0.0;
  for (auto& x : v) s += (x = u(rng));
  for (auto& x : v) x /= s;
  return v;
}

}  // namespace

TEST_CASE("parallel reductions agree with the serial reference") {
  for (std::size_t n : {std::size_t{1}, std::size_t{17}, kBlockSize - 1, kBlockSize,
                        kBlockSize + 1, std::size_t{100003}}) {
    CAPTURE(n);
    const auto p = random_probs(n, static_cast<unsigned>(n));
    const double ws = weighted_square_sum_serial(p);
    CHECK(weighted_square_sum_parallel(p) == doctest::Approx(ws).epsilon(1e-13));

    const auto rs = raw_moments_serial(p);
    const auto rp = raw_moments_parallel(p);
    CHECK(rp.m0 == doctest::Approx(rs.m0).epsilon(1e-13));
    CHECK(rp.m1 == doctest::Approx(rs.m1).epsilon(1e-13));
    CHECK(rp.m2 == doctest::Approx(rs.m2).epsilon(1e-13));

    const double c = rs.m1;
    CHECK(centered_square_sum_parallel(p, c) ==
          doctest::Approx(centered_square_sum_serial(p, c)).epsilon(1e-13));
  }
}

TEST_CASE("parallel reductions are bitwise independent of the thread count") {
  const auto p = random_probs(300001, 7);
  omp_set_num_threads(1);
  const double w1 = weighted_square_sum_parallel(p);
  const auto m1 = raw_moments_parallel(p);
  omp_set_num_threads(4);
  const double w4 = weighted_square_sum_parallel(p);
  const auto m4 = raw_moments_parallel(p);
  CHECK(w1 == w4);
  CHECK(m1.m0 == m4.m0);
  CHECK(m1.m1 == m4.m1);
  CHECK(m1.m2 == m4.m2);
}

TEST_CASE("reductions on small known vectors") {
  const std::vector<double> p{0.3, 0.4, 0.3};
  CHECK(weighted_square_sum(p) == doctest::Approx(0.2).epsilon(1e-15));
  const auto m = raw_moments(p);
  CHECK(m.m0 == doctest::Approx(1.0));
  CHECK(m.m1 == doctest::Approx(1.0));
  CHECK(m.m2 == doctest::Approx(1.6));
  CHECK(centered_square_sum(p, 1.0) == doctest::Approx(0.6));

  CHECK(weighted_square_sum(std::vector<double>{}) == 0.0);
}

#include <cmath>
#include <stdexcept>

#include "polmax/degree.hpp"

namespace polmax {

double scaled_bessel_i1_series(double x) {
  // I_1(x) = sum_k (x/2)^(2k+1) / (k! (k+1)!)
  const double half = x / 2.0;
  const double q = half * half;
  double term = half;
  double sum = 0.0;
  for (int k = 0; k < 500; ++k) {
    sum += term;
    if (term <= sum * 1e-17) break;
    term *= q / ((k + 1.0) * (k + 2.0));
  }
  return sum * std::exp(-x);
}

double scaled_bessel_i1_asymptotic(double x) {
  // e^{-x} I_1(x) ~ (2 pi x)^{-1/2} sum_k (-1)^k prod_{j<=k} (4 - (2j-1)^2) / (k! (8x)^k)
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = -term * (4.0 - odd * odd) / (k * 8.0 * x);
    if (std::abs(next) >= std::abs(term)) break;  // series has started to diverge
    sum += next;
    term = next;
    if (std::abs(term) <= std::abs(sum) * 1e-17) break;
  }
  return sum / std::sqrt(2.0 * M_PI * x);
}

double scaled_bessel_i1(double x) {
  if (!(x >= 0.0)) throw std::domain_error("scaled_bessel_i1: x must be >= 0");
  if (std::isinf(x)) return 0.0;
  return x <= kBesselCrossover ? scaled_bessel_i1_series(x) : scaled_bessel_i1_asymptotic(x);
}

}  // namespace polmax

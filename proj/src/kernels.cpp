#include "polmax/kernels.hpp"

#include <algorithm>
#include <vector>

namespace polmax::kernels {

namespace {

std::size_t block_count(std::size_t n) { return (n + kBlockSize - 1) / kBlockSize; }

}  // namespace

double weighted_square_sum_serial(std::span<const double> probs) {
  double sum = 0.0;
  for (std::size_t n = 0; n < probs.size(); ++n) {
    sum += probs[n] * probs[n] / static_cast<double>(n + 1);
  }
  return sum;
}

double weighted_square_sum_parallel(std::span<const double> probs) {
  const std::size_t n_total = probs.size();
  const auto blocks = static_cast<long>(block_count(n_total));
  std::vector<double> partial(static_cast<std::size_t>(blocks), 0.0);

#pragma omp parallel for schedule(static)
  for (long b = 0; b < blocks; ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kBlockSize;
    const std::size_t hi = std::min(n_total, lo + kBlockSize);
    double s = 0.0;
    for (std::size_t n = lo; n < hi; ++n) {
      s += probs[n] * probs[n] / static_cast<double>(n + 1);
    }
    partial[static_cast<std::size_t>(b)] = s;
  }

  double sum = 0.0;
  for (double s : partial) sum += s;
  return sum;
}

RawMoments raw_moments_serial(std::span<const double> probs) {
  RawMoments m;
  for (std::size_t n = 0; n < probs.size(); ++n) {
    const double x = static_cast<double>(n);
    m.m0 += probs[n];
    m.m1 += x * probs[n];
    m.m2 += x * x * probs[n];
  }
  return m;
}

RawMoments raw_moments_parallel(std::span<const double> probs) {
  const std::size_t n_total = probs.size();
  const auto blocks = static_cast<long>(block_count(n_total));
  std::vector<RawMoments> partial(static_cast<std::size_t>(blocks));

#pragma omp parallel for schedule(static)
  for (long b = 0; b < blocks; ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kBlockSize;
    const std::size_t hi = std::min(n_total, lo + kBlockSize);
    RawMoments m;
    for (std::size_t n = lo; n < hi; ++n) {
      const double x = static_cast<double>(n);
      m.m0 += probs[n];
      m.m1 += x * probs[n];
      m.m2 += x * x * probs[n];
    }
    partial[static_cast<std::size_t>(b)] = m;
  }

  RawMoments total;
  for (const auto& m : partial) {
    total.m0 += m.m0;
    total.m1 += m.m1;
    total.m2 += m.m2;
  }
  return total;
}

double centered_square_sum_serial(std::span<const double> probs, double center) {
  double sum = 0.0;
  for (std::size_t n = 0; n < probs.size(); ++n) {
    const double d = static_cast<double>(n) - center;
    sum += probs[n] * d * d;
  }
  return sum;
}

double centered_square_sum_parallel(std::span<const double> probs, double center) {
  const std::size_t n_total = probs.size();
  const auto blocks = static_cast<long>(block_count(n_total));
  std::vector<double> partial(static_cast<std::size_t>(blocks), 0.0);

#pragma omp parallel for schedule(static)
  for (long b = 0; b < blocks; ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kBlockSize;
    const std::size_t hi = std::min(n_total, lo + kBlockSize);
    double s = 0.0;
    for (std::size_t n = lo; n < hi; ++n) {
      const double d = static_cast<double>(n) - center;
      s += probs[n] * d * d;
    }
    partial[static_cast<std::size_t>(b)] = s;
  }

  double sum = 0.0;
  for (double s : partial) sum += s;
  return sum;
}

double weighted_square_sum(std::span<const double> probs) {
  return probs.size() < kParallelThreshold ? weighted_square_sum_serial(probs)
                                           : weighted_square_sum_parallel(probs);
}

RawMoments raw_moments(std::span<const double> probs) {
  return probs.size() < kParallelThreshold ? raw_moments_serial(probs)
                                           : raw_moments_parallel(probs);
}

double centered_square_sum(std::span<const double> probs, double center) {
  return probs.size() < kParallelThreshold ? centered_square_sum_serial(probs, center)
                                           : centered_square_sum_parallel(probs, center);
}

}  // namespace polmax::kernels

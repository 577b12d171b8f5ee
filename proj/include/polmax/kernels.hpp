#pragma once

#include <cstddef>
#include <span>

namespace polmax::kernels {

// Reductions over a probability vector indexed by photon number.
//
// The `_serial` versions are the reference implementations. The `_parallel`
// versions split the index range into fixed-size blocks, reduce the blocks
// under OpenMP and then add the block partials in index order, so the result
// does not depend on the thread count.

inline constexpr std::size_t kBlockSize = 4096;

/// sum_N p_N^2 / (N + 1)
double weighted_square_sum_serial(std::span<const double> probs);
double weighted_square_sum_parallel(std::span<const double> probs);

struct RawMoments {
  double m0 = 0.0;  // sum p_N
  double m1 = 0.0;  // sum N p_N
  double m2 = 0.0;  // sum N^2 p_N
};

RawMoments raw_moments_serial(std::span<const double> probs);
RawMoments raw_moments_parallel(std::span<const double> probs);

/// sum_N p_N (N - center)^2, the second pass of a two-pass variance.
double centered_square_sum_serial(std::span<const double> probs, double center);
double centered_square_sum_parallel(std::span<const double> probs, double center);

/// Vectors shorter than this are reduced serially by the dispatching wrappers.
inline constexpr std::size_t kParallelThreshold = 1 << 15;

double weighted_square_sum(std::span<const double> probs);
RawMoments raw_moments(std::span<const double> probs);
double centered_square_sum(std::span<const double> probs, double center);

}  // namespace polmax::kernels

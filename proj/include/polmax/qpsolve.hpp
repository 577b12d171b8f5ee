#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "polmax/distributions.hpp"

namespace polmax::qp {

// The maximally polarized distribution at fixed mean photon number solves
//
//   minimize   (1/2) p^T H p          H = 2 diag[1, 1/2, ..., 1/(D+1)]
//   subject to A p = b,  p >= 0       A = [1 1 1 ... 1; 0 1 2 ... D],  b = (1, nbar)
//
// since (1/2) p^T H p = sum_N p_N^2 / (N + 1) is exactly the subtracted term in
// the Hilbert-Schmidt degree.

class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateSetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonconvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QpProblem {
  double nbar = 0.0;
  int dim = 0;
  std::vector<double> hessian_diag;                 // h_N = 2 / (N + 1)
  std::array<std::vector<double>, 2> constraints;   // rows of A
  std::array<double, 2> rhs{1.0, 0.0};
};

/// Throws InfeasibleError when no distribution on 0..dim has mean nbar.
QpProblem build_problem(double nbar, int dim);

struct Multipliers {
  double normalization = 0.0;  // lambda_0
  double mean = 0.0;           // lambda_1

  /// lambda_0 + lambda_1 N, the value of A^T lambda at index N.
  double at(int n) const { return normalization + mean * n; }
};

struct KktResiduals {
  double primal_eq = 0.0;         // max(|Ap - b|_inf, max(0, -min p))
  double stationarity = 0.0;      // |Hp - A^T lambda - mu|_inf
  double dual_feasibility = 0.0;  // max(0, -min mu) over the active set
  double complementarity = 0.0;   // max |p_N mu_N|

  bool within(double tol) const {
    return primal_eq <= tol && stationarity <= tol && dual_feasibility <= tol &&
           complementarity <= tol;
  }
};

struct QpSolution {
  PhotonDistribution dist;
  Multipliers multipliers;
  std::vector<int> active_set;  // indices pinned at p_N = 0, ascending
  double objective = 0.0;       // (1/2) p^T H p
  KktResiduals kkt_residuals;
  int iterations = 0;
};

struct EqualitySolve {
  std::vector<double> p_free;  // aligned with the free set; may be negative
  Multipliers multipliers;
};

/// Solves the KKT system of the equality-constrained problem restricted to
/// `free_set` in closed form: lambda = (A H^-1 A^T)^-1 b, p = H^-1 A^T lambda,
/// i.e. p_N = (lambda_0 + lambda_1 N)(N + 1)/2. Throws DegenerateSetError when the
/// 2x2 system is singular (fewer than two distinct indices).
EqualitySolve kkt_equality_solve(const QpProblem& problem, const std::vector<int>& free_set);

inline constexpr double kDefaultTolerance = 1e-10;

/// Primal active-set method. `max_iter` <= 0 selects 10 (D + 1).
QpSolution solve(const QpProblem& problem, double tol = kDefaultTolerance, int max_iter = 0);

/// Recomputes the KKT residuals of `solution` from scratch; the bound
/// multipliers are mu = Hp - A^T lambda on the active set and zero elsewhere.
KktResiduals verify_kkt(const QpProblem& problem, const QpSolution& solution);

/// Number of components with p_N > tol.
int support_size(const QpSolution& solution, double tol = kDefaultTolerance);

/// Default truncation used by the command line: ceil(2 nbar) + 4.
int default_dim(double nbar);

}  // namespace polmax::qp

#include "polmax/qpsolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace polmax::qp {

namespace {

// 1/h_N
double inverse_hessian(int n) { return (n + 1.0) / 2.0; }

QpSolution vertex_solution(const QpProblem& problem, int vertex, Multipliers m) {
  QpSolution sol;
  sol.dist.probs.assign(static_cast<std::size_t>(problem.dim) + 1, 0.0);
  sol.dist.probs[static_cast<std::size_t>(vertex)] = 1.0;
  sol.dist.declared_mean = problem.nbar;
  sol.multipliers = m;
  for (int n = 0; n <= problem.dim; ++n) {
    if (n != vertex) sol.active_set.push_back(n);
  }
  sol.objective = 1.0 / (vertex + 1.0);
  sol.kkt_residuals = verify_kkt(problem, sol);
  return sol;
}

}  // namespace

QpProblem build_problem(double nbar, int dim) {
  if (!(std::isfinite(nbar) && nbar >= 0.0)) {
    throw std::domain_error("nbar must be finite and >= 0");
  }
  if (dim < 0) throw std::domain_error("dim must be >= 0");
  if (nbar > dim) {
    throw InfeasibleError("no distribution on N = 0.." + std::to_string(dim) + " has mean " +
                          std::to_string(nbar) + "; the largest attainable mean is " +
                          std::to_string(dim) + ", so dim must be >= ceil(nbar)");
  }

  QpProblem p;
  p.nbar = nbar;
  p.dim = dim;
  const auto size = static_cast<std::size_t>(dim) + 1;
  p.hessian_diag.resize(size);
  p.constraints[0].assign(size, 1.0);
  p.constraints[1].resize(size);
  for (int n = 0; n <= dim; ++n) {
    p.hessian_diag[static_cast<std::size_t>(n)] = 2.0 / (n + 1.0);
    p.constraints[1][static_cast<std::size_t>(n)] = n;
  }
  p.rhs = {1.0, nbar};
  return p;
}

EqualitySolve kkt_equality_solve(const QpProblem& problem, const std::vector<int>& free_set) {
  for (std::size_t i = 0; i < free_set.size(); ++i) {
    if (free_set[i] < 0 || free_set[i] > problem.dim) {
      throw std::invalid_argument("free set index out of range");
    }
    if (i > 0 && free_set[i] <= free_set[i - 1]) {
      throw std::invalid_argument("free set must be strictly increasing");
    }
  }
  if (free_set.size() < 2) {
    throw DegenerateSetError("free set has " + std::to_string(free_set.size()) +
                             " index; two equality constraints need at least two");
  }

  // Same solve as lambda = (A H^-1 A^T)^-1 b, written in the basis {1, N - c}
  // with c the H^-1-weighted centroid of the free set. The 2x2 matrix is then
  // diagonal, which avoids the cancellation in its determinant for large D.
  double s0 = 0.0;
  double s1 = 0.0;
  for (int n : free_set) {
    s0 += inverse_hessian(n);
    s1 += inverse_hessian(n) * n;
  }
  const double centroid = s1 / s0;
  double s2 = 0.0;
  for (int n : free_set) {
    const double d = n - centroid;
    s2 += inverse_hessian(n) * d * d;
  }
  if (!(s2 > 0.0)) throw DegenerateSetError("KKT system restricted to the free set is singular");

  const double alpha = problem.rhs[0] / s0;
  const double beta = (problem.rhs[1] - centroid * problem.rhs[0]) / s2;

  EqualitySolve out;
  out.multipliers.normalization = alpha - beta * centroid;
  out.multipliers.mean = beta;
  out.p_free.reserve(free_set.size());
  for (int n : free_set) {
    out.p_free.push_back(inverse_hessian(n) * (alpha + beta * (n - centroid)));
  }
  return out;
}

QpSolution solve(const QpProblem& problem, double tol, int max_iter) {
  const int dim = problem.dim;
  const double nbar = problem.nbar;
  if (nbar > dim || nbar < 0.0) throw InfeasibleError("problem is infeasible");
  if (max_iter <= 0) max_iter = 10 * (dim + 1);

  // A single feasible point: the KKT system is degenerate, return the vertex.
  // The multipliers are chosen so the first neighbour has mu = 0.
  if (nbar == 0.0) return vertex_solution(problem, 0, {2.0, -2.0});
  if (nbar == dim) {
    const double slope = 2.0 / (dim + 1.0);
    return vertex_solution(problem, dim, {-slope * (dim - 1.0), slope});
  }

  std::vector<char> is_free(static_cast<std::size_t>(dim) + 1, 0);
  const int window_top = std::min(dim, static_cast<int>(std::ceil(2.0 * nbar)) + 1);
  for (int n = 0; n <= window_top; ++n) is_free[static_cast<std::size_t>(n)] = 1;
  bool full_set = window_top == dim;

  auto free_indices = [&] {
    std::vector<int> out;
    for (int n = 0; n <= dim; ++n) {
      if (is_free[static_cast<std::size_t>(n)]) out.push_back(n);
    }
    return out;
  };

  EqualitySolve eq;
  std::vector<int> free_set;
  int iter = 0;
  for (;; ++iter) {
    if (iter >= max_iter) {
      throw NonconvergenceError("active-set iteration did not converge in " +
                                std::to_string(max_iter) + " iterations");
    }
    free_set = free_indices();
    try {
      eq = kkt_equality_solve(problem, free_set);
    } catch (const DegenerateSetError&) {
      if (full_set) throw;
      std::fill(is_free.begin(), is_free.end(), 1);
      full_set = true;
      continue;
    }

    // Most negative free component leaves; ties go to the smallest index.
    int drop = -1;
    double worst = -tol;
    for (std::size_t i = 0; i < free_set.size(); ++i) {
      if (eq.p_free[i] < worst) {
        worst = eq.p_free[i];
        drop = free_set[i];
      }
    }
    if (drop >= 0) {
      is_free[static_cast<std::size_t>(drop)] = 0;
      continue;
    }

    // Bound multipliers on the active set: mu_N = h_N * 0 - (lambda_0 + lambda_1 N).
    int release = -1;
    worst = -tol;
    for (int n = 0; n <= dim; ++n) {
      if (is_free[static_cast<std::size_t>(n)]) continue;
      const double mu = -eq.multipliers.at(n);
      if (mu < worst) {
        worst = mu;
        release = n;
      }
    }
    if (release >= 0) {
      is_free[static_cast<std::size_t>(release)] = 1;
      continue;
    }
    break;
  }

  // Components within tol of zero are pinned to the bound and the equality
  // system re-solved once, so zeroing them does not leave a primal residual.
  // Kept only if the re-solve stays primal and dual feasible within tol.
  {
    std::vector<int> pinned_free;
    for (std::size_t i = 0; i < free_set.size(); ++i) {
      if (std::abs(eq.p_free[i]) > tol) pinned_free.push_back(free_set[i]);
    }
    if (pinned_free.size() != free_set.size() && pinned_free.size() >= 2) {
      try {
        auto pinned = kkt_equality_solve(problem, pinned_free);
        bool ok = std::all_of(pinned.p_free.begin(), pinned.p_free.end(),
                              [tol](double p) { return p >= -tol; });
        std::vector<char> keep(static_cast<std::size_t>(dim) + 1, 0);
        for (int n : pinned_free) keep[static_cast<std::size_t>(n)] = 1;
        for (int n = 0; ok && n <= dim; ++n) {
          if (!keep[static_cast<std::size_t>(n)]) ok = -pinned.multipliers.at(n) >= -tol;
        }
        if (ok) {
          eq = std::move(pinned);
          free_set = std::move(pinned_free);
        }
      } catch (const DegenerateSetError&) {
      }
    }
  }

  QpSolution sol;
  sol.iterations = iter + 1;
  sol.multipliers = eq.multipliers;
  sol.dist.probs.assign(static_cast<std::size_t>(dim) + 1, 0.0);
  sol.dist.declared_mean = nbar;
  for (std::size_t i = 0; i < free_set.size(); ++i) {
    const double p = eq.p_free[i];
    const auto n = static_cast<std::size_t>(free_set[i]);
    if (std::abs(p) <= tol) {
      // Clamped mass is reported as discarded.
      sol.dist.tail_bound += std::abs(p);
      sol.dist.mean_tail_bound += std::abs(p) * static_cast<double>(n);
    } else {
      sol.dist.probs[n] = p;
    }
  }
  for (int n = 0; n <= dim; ++n) {
    const double p = sol.dist.probs[static_cast<std::size_t>(n)];
    if (p == 0.0) sol.active_set.push_back(n);
    sol.objective += p * p / (n + 1.0);
  }
  sol.kkt_residuals = verify_kkt(problem, sol);
  return sol;
}

KktResiduals verify_kkt(const QpProblem& problem, const QpSolution& solution) {
  const auto& p = solution.dist.probs;
  const int dim = problem.dim;
  std::vector<char> active(static_cast<std::size_t>(dim) + 1, 0);
  for (int n : solution.active_set) {
    if (n >= 0 && n <= dim) active[static_cast<std::size_t>(n)] = 1;
  }
  auto prob = [&](int n) {
    return static_cast<std::size_t>(n) < p.size() ? p[static_cast<std::size_t>(n)] : 0.0;
  };

  KktResiduals r;
  double sum = 0.0;
  double mean = 0.0;
  double min_p = 0.0;
  for (int n = 0; n <= dim; ++n) {
    const double pn = prob(n);
    sum += pn;
    mean += n * pn;
    min_p = std::min(min_p, pn);
  }
  // Entries past the truncation are infeasible by definition.
  for (std::size_t n = static_cast<std::size_t>(dim) + 1; n < p.size(); ++n) {
    min_p = std::min(min_p, -std::abs(p[n]));
  }
  r.primal_eq = std::max({std::abs(sum - problem.rhs[0]), std::abs(mean - problem.rhs[1]), -min_p});

  for (int n = 0; n <= dim; ++n) {
    const double pn = prob(n);
    const double gradient = problem.hessian_diag[static_cast<std::size_t>(n)] * pn -
                            solution.multipliers.at(n);
    if (active[static_cast<std::size_t>(n)]) {
      r.dual_feasibility = std::max(r.dual_feasibility, -gradient);
      r.complementarity = std::max(r.complementarity, std::abs(pn * gradient));
    } else {
      r.stationarity = std::max(r.stationarity, std::abs(gradient));
    }
  }
  return r;
}

int support_size(const QpSolution& solution, double tol) {
  return static_cast<int>(std::count_if(solution.dist.probs.begin(), solution.dist.probs.end(),
                                        [tol](double p) { return p > tol; }));
}

int default_dim(double nbar) { return static_cast<int>(std::ceil(2.0 * nbar)) + 4; }

}  // namespace polmax::qp

#include "polmax/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "polmax/degree.hpp"
#include "polmax/distributions.hpp"
#include "polmax/qpsolve.hpp"

namespace polmax {

std::vector<double> nbar_grid(double start, double end, double step) {
  if (!(std::isfinite(start) && std::isfinite(end) && std::isfinite(step))) {
    throw std::invalid_argument("grid bounds must be finite");
  }
  if (start < 0.0 || end < start) throw std::invalid_argument("grid needs 0 <= start <= end");
  if (!(step > 0.0)) throw std::invalid_argument("grid step must be > 0");

  const auto count = static_cast<long>(std::floor((end - start) / step + 1e-9)) + 1;
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) {
    const double x = start + static_cast<double>(i) * step;
    const double snapped = std::round(x * 1e9) / 1e9;
    grid.push_back(std::abs(snapped - x) <= 1e-12 * std::max(1.0, std::abs(x)) ? snapped : x);
  }
  return grid;
}

SweepRecord evaluate_sweep_point(double nbar) {
  const auto problem = qp::build_problem(nbar, qp::default_dim(nbar));
  const auto solution = qp::solve(problem);

  SweepRecord r;
  r.nbar = nbar;
  r.degree_optimal = 1.0 - solution.objective;
  r.degree_coherent = degree_coherent_closed_form(nbar).value;
  r.degree_thermal = degree_thermal_series(nbar).value;
  r.degree_twin_exact = degree_twin_beam_exact(twin_beam_squeezing(nbar)).value;
  r.mandel_q_optimal = nbar > 0.0 ? mandel_q(solution.dist) : 0.0;
  r.support_size = qp::support_size(solution);
  return r;
}

std::vector<SweepRecord> sweep_serial(const std::vector<double>& grid) {
  std::vector<SweepRecord> out;
  out.reserve(grid.size());
  for (double nbar : grid) out.push_back(evaluate_sweep_point(nbar));
  return out;
}

std::vector<SweepRecord> sweep_parallel(const std::vector<double>& grid) {
  std::vector<SweepRecord> out(grid.size());
  const auto count = static_cast<long>(grid.size());
  bool failed = false;
  std::string message;

#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = evaluate_sweep_point(grid[static_cast<std::size_t>(i)]);
    } catch (const std::exception& e) {
#pragma omp critical(polmax_sweep_error)
      {
        if (!failed) message = e.what();
        failed = true;
      }
    }
  }
  if (failed) throw std::runtime_error(message);
  return out;
}

std::vector<ProfileRow> profile_rows(const std::vector<double>& nbars, int dim) {
  const auto width = static_cast<std::size_t>(dim) + 1;
  std::vector<ProfileRow> rows(nbars.size() * width);
  const auto count = static_cast<long>(nbars.size());
  bool failed = false;
  std::string message;

#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    const double nbar = nbars[static_cast<std::size_t>(i)];
    try {
      const auto sol = qp::solve(qp::build_problem(nbar, dim));
      for (std::size_t n = 0; n < width; ++n) {
        rows[static_cast<std::size_t>(i) * width + n] = {nbar, static_cast<int>(n),
                                                         sol.dist.probs[n]};
      }
    } catch (const std::exception& e) {
#pragma omp critical(polmax_profile_error)
      {
        if (!failed) message = e.what();
        failed = true;
      }
    }
  }
  if (failed) throw std::runtime_error(message);
  return rows;
}

std::vector<MandelRow> mandel_rows(const std::vector<double>& nbars) {
  std::vector<MandelRow> rows(nbars.size());
  const auto count = static_cast<long>(nbars.size());
  bool failed = false;
  std::string message;

#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    const double nbar = nbars[static_cast<std::size_t>(i)];
    try {
      const auto sol = qp::solve(qp::build_problem(nbar, qp::default_dim(nbar)));
      rows[static_cast<std::size_t>(i)] = {nbar, nbar > 0.0 ? mandel_q(sol.dist) : 0.0};
    } catch (const std::exception& e) {
#pragma omp critical(polmax_mandel_error)
      {
        if (!failed) message = e.what();
        failed = true;
      }
    }
  }
  if (failed) throw std::runtime_error(message);
  return rows;
}

std::vector<ProfileRow> figure1_rows() { return profile_rows(nbar_grid(0.2, 1.0, 0.2), 4); }

std::vector<MandelRow> figure2_rows() { return mandel_rows(nbar_grid(0.2, 9.0, 0.2)); }

std::vector<ProfileRow> figure3_rows() { return profile_rows(nbar_grid(1.0, 9.0, 1.0), 25); }

}  // namespace polmax

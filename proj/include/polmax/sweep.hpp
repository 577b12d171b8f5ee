#pragma once

#include <vector>

namespace polmax {

/// Degrees of the catalog states at one mean photon number.
struct SweepRecord {
  double nbar = 0.0;
  double degree_optimal = 0.0;    // from the QP solution
  double degree_coherent = 0.0;
  double degree_thermal = 0.0;
  double degree_twin_exact = 0.0;
  double mandel_q_optimal = 0.0;  // 0 at nbar = 0 (limit of the QP optimum)
  int support_size = 0;

  bool operator==(const SweepRecord&) const = default;
};

/// start, start + step, ..., up to end (inclusive within rounding). Each point
/// is snapped to 1e-9 when it lies within 1e-12 relative of that grid, so
/// decimal steps such as 0.2 land on 3.0 exactly.
std::vector<double> nbar_grid(double start, double end, double step);

SweepRecord evaluate_sweep_point(double nbar);

// Grid points are independent; the parallel version writes each record into
// its own slot so the output order and bits match the serial reference.
std::vector<SweepRecord> sweep_serial(const std::vector<double>& grid);
std::vector<SweepRecord> sweep_parallel(const std::vector<double>& grid);

struct ProfileRow {
  double nbar = 0.0;
  int n = 0;
  double p = 0.0;
};

struct MandelRow {
  double nbar = 0.0;
  double q = 0.0;
};

/// QP optima for nbar = 0.2, 0.4, ..., 1.0 on D = 4, every N listed.
std::vector<ProfileRow> figure1_rows();
/// Mandel Q of the QP optimum for nbar = 0.2, 0.4, ..., 9.0.
std::vector<MandelRow> figure2_rows();
/// QP optima for integer nbar = 1..9 on D = 25, every N listed.
std::vector<ProfileRow> figure3_rows();

/// Rows for an arbitrary set of means on a fixed truncation.
std::vector<ProfileRow> profile_rows(const std::vector<double>& nbars, int dim);
std::vector<MandelRow> mandel_rows(const std::vector<double>& nbars);

}  // namespace polmax

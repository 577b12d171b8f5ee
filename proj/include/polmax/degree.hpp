#pragma once

#include <optional>
#include <string_view>

#include "polmax/distributions.hpp"

namespace polmax {

enum class DegreeMethod { Series, ClosedForm, FromQp };

std::string_view to_string(DegreeMethod m);
DegreeMethod degree_method_from_string(std::string_view s);

/// Hilbert-Schmidt degree of polarization together with how it was obtained.
/// `truncation_dim` is empty for closed forms that sum the full series.
struct DegreeResult {
  double value = 0.0;
  DegreeMethod method = DegreeMethod::ClosedForm;
  double purity = 1.0;
  std::optional<int> truncation_dim;
  double tail_bound = 0.0;
};

/// purity - sum_N p_N^2 / (N + 1). The discarded part of the sum is bounded by
/// tail_bound^2, which is what the result reports.
DegreeResult hs_degree(const PhotonDistribution& dist, double purity = 1.0);

DegreeResult degree_pure_n_photon(int n);

/// 1 - e^{-2 nbar} I_1(2 nbar) / nbar, the degree of a two-mode coherent state.
DegreeResult degree_coherent_closed_form(double nbar);

/// e^{-x} I_1(x), relative error <= 1e-12 for every x >= 0.
double scaled_bessel_i1(double x);
/// Branches of scaled_bessel_i1; exposed so the crossover can be checked.
double scaled_bessel_i1_series(double x);
double scaled_bessel_i1_asymptotic(double x);
inline constexpr double kBesselCrossover = 20.0;

/// Parabolic photon-number profile maximizing the degree at mean `nbar`,
/// supported on N = 0..ceil(2 nbar). Exact when 2*nbar is an integer; otherwise
/// the clipped profile is returned with `approximate` set, and the exact
/// optimum has to come from the QP solver.
PhotonDistribution optimal_distribution(double nbar);
bool optimal_closed_form_is_exact(double nbar);

/// 1 - 3 / ((2 nbar + 1)(2 nbar + 3))
DegreeResult degree_optimal_closed_form(double nbar);

/// (3 / nbar) x (1 - x): continuum limit of optimal_distribution with x = N / (2 nbar).
double beta22_density(double x, double nbar);

/// Degree of the full geometric law p_N = (1 - mu) mu^N, mu = nbar / (nbar + 1):
/// 1 + ((1 - mu)^2 / mu^2) ln(1 - mu^2).
DegreeResult degree_thermal_series(double nbar);

/// Degree of the two-mode squeezed vacuum, whose photons come in pairs:
/// 1 - ((1 - lambda)^2 / lambda) artanh(lambda), lambda = tanh^2 xi.
DegreeResult degree_twin_beam_exact(double xi);

/// A literature value reproduced as-is, without an independent derivation.
struct QuotedValue {
  double value = 0.0;
  bool verified = false;
};

/// Bures-distance degree of the twin beam as quoted: 1 - 1/nbar^2.
QuotedValue bures_degree_twin_reference(double nbar);

/// Routes a catalog state to its closed form, or to hs_degree for custom
/// distributions (using `purity`).
DegreeResult degree_of(const StateSpec& spec, double purity = 1.0);

}  // namespace polmax

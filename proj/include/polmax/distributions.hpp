#pragma once

#include <complex>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace polmax {

/// Truncated distribution of the total photon number N = 0..D of a two-mode field.
///
/// `tail_bound` bounds the probability mass discarded beyond D and
/// `mean_tail_bound` bounds the discarded first moment sum_{N>D} N p_N, so the
/// truncated sums can be compared against `declared_mean` with a certified slack.
/// `approximate` marks closed-form profiles that are not exactly normalized
/// (see optimal_distribution); such values skip the normalization checks.
struct PhotonDistribution {
  std::vector<double> probs;
  double declared_mean = 0.0;
  double tail_bound = 0.0;
  double mean_tail_bound = 0.0;
  bool approximate = false;

  int truncation_dim() const { return static_cast<int>(probs.size()) - 1; }
};

/// Throws std::domain_error if `dist` breaks a PhotonDistribution invariant.
void validate(const PhotonDistribution& dist);

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
};

PhotonDistribution poisson_distribution(double nbar, int dim);
PhotonDistribution thermal_distribution(double nbar, int dim);
PhotonDistribution twin_beam_distribution(double xi, int dim);

/// Point mass at N photons, e.g. a pure N-photon state.
PhotonDistribution delta_distribution(int n);

/// Wraps caller-supplied probabilities. Entries must be non-negative; a sum
/// within 1e-9 of one is renormalized, anything further off is rejected.
PhotonDistribution custom_distribution(std::vector<double> probs);

/// Smallest D whose discarded Poisson mass is below `eps`.
int certified_dim_poisson(double nbar, double eps = 1e-12);
/// Smallest D with mu^(D+1) < eps for a geometric law of ratio mu.
int certified_dim_geometric(double mu, double eps = 1e-12);

/// Twin-beam mean photon number 2 sinh^2(xi), and its inverse.
double twin_beam_mean(double xi);
double twin_beam_squeezing(double nbar);

std::vector<std::complex<double>> su2_coherent_coefficients(int n, double theta, double phi);

Moments distribution_moments(const PhotonDistribution& dist);
double mandel_q(const PhotonDistribution& dist);

namespace state {
struct NPhotonPure { int n = 0; int k = 0; };
struct Su2Coherent { int n = 0; double theta = 0.0; double phi = 0.0; };
struct QuadratureCoherent { double nbar = 0.0; };
struct TwinBeam { double xi = 0.0; };
struct ThermalTotal { double nbar = 0.0; };
struct Custom { PhotonDistribution dist; };
}  // namespace state

using StateSpec = std::variant<state::NPhotonPure, state::Su2Coherent, state::QuadratureCoherent,
                               state::TwinBeam, state::ThermalTotal, state::Custom>;

/// Throws std::domain_error on out-of-range parameters.
void validate(const StateSpec& spec);

}  // namespace polmax

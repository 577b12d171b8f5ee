#include "polmax/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "polmax/kernels.hpp"

namespace polmax {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::domain_error(what);
}

void require_dim(int dim) { require(dim >= 0, "truncation dimension must be >= 0"); }

void require_nonneg(double x, const char* name) {
  require(std::isfinite(x) && x >= 0.0, std::string(name) + " must be finite and >= 0");
}

// log of e^-nbar nbar^N / N!
double poisson_log_pmf(double nbar, int n) {
  return -nbar + n * std::log(nbar) - std::lgamma(n + 1.0);
}

// Discarded Poisson mass beyond `dim`. Terms are summed until they stop
// contributing; the remainder is bounded by a geometric series once the term
// ratio nbar/(N+1) drops below one.
double poisson_tail(double nbar, int dim) {
  if (nbar == 0.0) return 0.0;
  const double log_nbar = std::log(nbar);
  double log_term = poisson_log_pmf(nbar, dim + 1);
  double tail = 0.0;
  for (long n = dim + 1;; ++n) {
    const double term = std::exp(log_term);
    tail += term;
    const double ratio = nbar / static_cast<double>(n + 1);
    if (ratio < 1.0 && (term <= tail * 1e-18 || term == 0.0)) {
      tail += term * ratio / (1.0 - ratio);
      break;
    }
    log_term += log_nbar - std::log(static_cast<double>(n + 1));
  }
  return tail;
}

}  // namespace

void validate(const PhotonDistribution& dist) {
  require(!dist.probs.empty(), "distribution must have at least one entry");
  for (double p : dist.probs) {
    require(std::isfinite(p) && p >= 0.0, "probabilities must be finite and non-negative");
  }
  require(std::isfinite(dist.tail_bound) && dist.tail_bound >= 0.0, "tail bound must be >= 0");
  require(std::isfinite(dist.declared_mean) && dist.declared_mean >= 0.0,
          "declared mean must be >= 0");
  if (dist.approximate) return;

  const auto raw = kernels::raw_moments(dist.probs);
  const double rounding =
      1e-12 + static_cast<double>(dist.probs.size()) * std::numeric_limits<double>::epsilon();
  require(std::abs(raw.m0 - 1.0) <= dist.tail_bound + rounding,
          "probabilities do not sum to one within the tail bound");
  const double mean_slack = dist.mean_tail_bound + 1e-9 * std::max(1.0, dist.declared_mean);
  require(std::abs(raw.m1 - dist.declared_mean) <= mean_slack,
          "mean does not match the declared mean within the tail bound");
}

PhotonDistribution poisson_distribution(double nbar, int dim) {
  require_nonneg(nbar, "nbar");
  require_dim(dim);

  PhotonDistribution d;
  d.probs.assign(static_cast<std::size_t>(dim) + 1, 0.0);
  d.declared_mean = nbar;
  if (nbar == 0.0) {
    d.probs[0] = 1.0;
    return d;
  }

  // Anchor at the mode with lgamma, then walk outwards with the term ratio.
  const int anchor = std::min(dim, static_cast<int>(std::floor(nbar)));
  const double log_nbar = std::log(nbar);
  const double log_anchor = poisson_log_pmf(nbar, anchor);
  double lp = log_anchor;
  for (int n = anchor; n >= 0; --n) {
    d.probs[static_cast<std::size_t>(n)] = std::exp(lp);
    lp -= log_nbar - std::log(static_cast<double>(n));
  }
  lp = log_anchor;
  for (int n = anchor + 1; n <= dim; ++n) {
    lp += log_nbar - std::log(static_cast<double>(n));
    d.probs[static_cast<std::size_t>(n)] = std::exp(lp);
  }

  d.tail_bound = poisson_tail(nbar, dim);
  // sum_{N>D} N p_N = nbar * sum_{N>=D} p_N
  d.mean_tail_bound = nbar * (d.probs.back() + d.tail_bound);
  return d;
}

PhotonDistribution thermal_distribution(double nbar, int dim) {
  require_nonneg(nbar, "nbar");
  require_dim(dim);

  const double mu = nbar / (nbar + 1.0);
  const double one_minus_mu = 1.0 / (nbar + 1.0);

  PhotonDistribution d;
  d.probs.resize(static_cast<std::size_t>(dim) + 1);
  d.declared_mean = nbar;
  double power = 1.0;
  for (auto& p : d.probs) {
    p = one_minus_mu * power;
    power *= mu;
  }
  // power == mu^(D+1) here
  d.tail_bound = power;
  d.mean_tail_bound = power * (dim + 1.0 + nbar);
  return d;
}

double twin_beam_mean(double xi) {
  const double s = std::sinh(xi);
  return 2.0 * s * s;
}

double twin_beam_squeezing(double nbar) {
  require_nonneg(nbar, "nbar");
  return std::asinh(std::sqrt(nbar / 2.0));
}

PhotonDistribution twin_beam_distribution(double xi, int dim) {
  require_nonneg(xi, "xi");
  require_dim(dim);

  const double t = std::tanh(xi);
  const double lambda = t * t;
  const double c = std::cosh(xi);
  const double one_minus_lambda = 1.0 / (c * c);
  const double half_mean = std::sinh(xi) * std::sinh(xi);

  PhotonDistribution d;
  d.probs.assign(static_cast<std::size_t>(dim) + 1, 0.0);
  d.declared_mean = 2.0 * half_mean;
  double power = 1.0;
  for (int n = 0; 2 * n <= dim; ++n) {
    d.probs[static_cast<std::size_t>(2 * n)] = one_minus_lambda * power;
    power *= lambda;
  }
  const int pairs_kept = dim / 2 + 1;
  // power == lambda^pairs_kept
  d.tail_bound = power;
  d.mean_tail_bound = 2.0 * power * (pairs_kept + half_mean);
  return d;
}

PhotonDistribution delta_distribution(int n) {
  require(n >= 0, "photon number must be >= 0");
  PhotonDistribution d;
  d.probs.assign(static_cast<std::size_t>(n) + 1, 0.0);
  d.probs.back() = 1.0;
  d.declared_mean = n;
  return d;
}

PhotonDistribution custom_distribution(std::vector<double> probs) {
  require(!probs.empty(), "custom distribution needs at least one probability");
  for (double p : probs) {
    require(std::isfinite(p) && p >= 0.0, "custom probabilities must be finite and >= 0");
  }
  const double sum = std::accumulate(probs.begin(), probs.end(), 0.0);
  require(std::abs(sum - 1.0) <= 1e-9, "custom probabilities must sum to 1 within 1e-9, got " +
                                           std::to_string(sum));
  for (auto& p : probs) p /= sum;

  PhotonDistribution d;
  d.probs = std::move(probs);
  d.declared_mean = kernels::raw_moments(d.probs).m1;
  return d;
}

int certified_dim_poisson(double nbar, double eps) {
  require_nonneg(nbar, "nbar");
  require(eps > 0.0, "eps must be > 0");
  if (nbar == 0.0) return 0;
  int dim = static_cast<int>(std::floor(nbar));
  while (poisson_tail(nbar, dim) >= eps) ++dim;
  return dim;
}

int certified_dim_geometric(double mu, double eps) {
  require(mu >= 0.0 && mu < 1.0, "geometric ratio must lie in [0, 1)");
  require(eps > 0.0 && eps < 1.0, "eps must lie in (0, 1)");
  if (mu == 0.0) return 0;
  int dim = std::max(0, static_cast<int>(std::ceil(std::log(eps) / std::log(mu))) - 1);
  while (std::pow(mu, dim + 1.0) >= eps) ++dim;
  while (dim > 0 && std::pow(mu, static_cast<double>(dim)) < eps) --dim;
  return dim;
}

std::vector<std::complex<double>> su2_coherent_coefficients(int n, double theta, double phi) {
  require(n >= 0, "photon number must be >= 0");
  require(theta >= 0.0 && theta <= M_PI, "theta must lie in [0, pi]");
  require(std::isfinite(phi), "phi must be finite");

  const double s = std::sin(theta / 2.0);
  const double c = std::cos(theta / 2.0);
  std::vector<std::complex<double>> coeffs(static_cast<std::size_t>(n) + 1);

  if (n < 50) {
    double binom = 1.0;
    for (int k = 0; k <= n; ++k) {
      const double mag = std::sqrt(binom) * std::pow(s, n - k) * std::pow(c, k);
      coeffs[static_cast<std::size_t>(k)] = std::polar(mag, -k * phi);
      binom = binom * (n - k) / (k + 1.0);
    }
    return coeffs;
  }

  const double log_s = std::log(s);
  const double log_c = std::log(c);
  const double lg_n = std::lgamma(n + 1.0);
  for (int k = 0; k <= n; ++k) {
    double mag = 0.0;
    if ((s > 0.0 || k == n) && (c > 0.0 || k == 0)) {
      double log_mag = 0.5 * (lg_n - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
      if (n - k > 0) log_mag += (n - k) * log_s;
      if (k > 0) log_mag += k * log_c;
      mag = std::exp(log_mag);
    }
    coeffs[static_cast<std::size_t>(k)] = std::polar(mag, -k * phi);
  }
  return coeffs;
}

Moments distribution_moments(const PhotonDistribution& dist) {
  const auto raw = kernels::raw_moments(dist.probs);
  Moments m;
  if (raw.m0 <= 0.0) return m;
  m.mean = raw.m1 / raw.m0;
  m.variance = kernels::centered_square_sum(dist.probs, m.mean) / raw.m0;
  return m;
}

double mandel_q(const PhotonDistribution& dist) {
  const auto m = distribution_moments(dist);
  require(m.mean > 0.0, "Mandel Q is undefined for a zero-mean distribution");
  return m.variance / m.mean - 1.0;
}

namespace {

struct SpecValidator {
  void operator()(const state::NPhotonPure& s) const {
    require(s.n >= 0, "n must be >= 0");
    require(s.k >= 0 && s.k <= s.n, "k must lie in [0, n]");
  }
  void operator()(const state::Su2Coherent& s) const {
    require(s.n >= 0, "n must be >= 0");
    require(s.theta >= 0.0 && s.theta <= M_PI, "theta must lie in [0, pi]");
    require(s.phi >= 0.0 && s.phi < 2.0 * M_PI, "phi must lie in [0, 2 pi)");
  }
  void operator()(const state::QuadratureCoherent& s) const { require_nonneg(s.nbar, "nbar"); }
  void operator()(const state::TwinBeam& s) const { require_nonneg(s.xi, "xi"); }
  void operator()(const state::ThermalTotal& s) const { require_nonneg(s.nbar, "nbar"); }
  void operator()(const state::Custom& s) const { validate(s.dist); }
};

}  // namespace

void validate(const StateSpec& spec) { std::visit(SpecValidator{}, spec); }

}  // namespace polmax

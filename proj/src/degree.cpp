#include "polmax/degree.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "polmax/kernels.hpp"

namespace polmax {

namespace {

void require_nonneg(double x, const char* name) {
  if (!(std::isfinite(x) && x >= 0.0)) {
    throw std::domain_error(std::string(name) + " must be finite and >= 0");
  }
}

DegreeResult closed_form(double value) {
  DegreeResult r;
  r.value = value;
  r.method = DegreeMethod::ClosedForm;
  return r;
}

}  // namespace

std::string_view to_string(DegreeMethod m) {
  switch (m) {
    case DegreeMethod::Series: return "series";
    case DegreeMethod::ClosedForm: return "closed_form";
    case DegreeMethod::FromQp: return "qp";
  }
  return "unknown";
}

DegreeMethod degree_method_from_string(std::string_view s) {
  if (s == "series") return DegreeMethod::Series;
  if (s == "closed_form") return DegreeMethod::ClosedForm;
  if (s == "qp") return DegreeMethod::FromQp;
  throw std::invalid_argument("unknown degree method: " + std::string(s));
}

DegreeResult hs_degree(const PhotonDistribution& dist, double purity) {
  if (!(purity > 0.0 && purity <= 1.0)) {
    throw std::domain_error("purity must lie in (0, 1]");
  }
  validate(dist);

  DegreeResult r;
  r.value = purity - kernels::weighted_square_sum(dist.probs);
  // The twirled (unpolarized) state never has a larger purity than the state itself.
  if (r.value < -1e-12) {
    throw std::domain_error("purity is below the purity of the unpolarized projection");
  }
  r.method = DegreeMethod::Series;
  r.purity = purity;
  r.truncation_dim = dist.truncation_dim();
  r.tail_bound = dist.tail_bound * dist.tail_bound;
  return r;
}

DegreeResult degree_pure_n_photon(int n) {
  if (n < 0) throw std::domain_error("photon number must be >= 0");
  return closed_form(static_cast<double>(n) / (n + 1.0));
}

DegreeResult degree_coherent_closed_form(double nbar) {
  require_nonneg(nbar, "nbar");
  if (nbar == 0.0) return closed_form(0.0);
  return closed_form(1.0 - scaled_bessel_i1(2.0 * nbar) / nbar);
}

bool optimal_closed_form_is_exact(double nbar) {
  const double twice = 2.0 * nbar;
  return twice == std::floor(twice);
}

PhotonDistribution optimal_distribution(double nbar) {
  require_nonneg(nbar, "nbar");

  const int top = static_cast<int>(std::ceil(2.0 * nbar));
  const double norm = 3.0 / ((2.0 * nbar + 1.0) * (nbar + 1.0) * (2.0 * nbar + 3.0));

  PhotonDistribution d;
  d.probs.resize(static_cast<std::size_t>(top) + 1);
  d.declared_mean = nbar;
  d.approximate = !optimal_closed_form_is_exact(nbar);
  for (int n = 0; n <= top; ++n) {
    // (nbar + 1)^2 - (n - nbar)^2 factored so integer nbar gives exact symmetry.
    const double weight = (n + 1.0) * (2.0 * nbar + 1.0 - n);
    d.probs[static_cast<std::size_t>(n)] = weight > 0.0 ? norm * weight : 0.0;
  }
  return d;
}

DegreeResult degree_optimal_closed_form(double nbar) {
  require_nonneg(nbar, "nbar");
  return closed_form(1.0 - 3.0 / ((2.0 * nbar + 1.0) * (2.0 * nbar + 3.0)));
}

double beta22_density(double x, double nbar) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("x must lie in [0, 1]");
  if (!(nbar > 0.0)) throw std::domain_error("nbar must be > 0");
  return 3.0 / nbar * x * (1.0 - x);
}

DegreeResult degree_thermal_series(double nbar) {
  require_nonneg(nbar, "nbar");
  if (nbar == 0.0) return closed_form(0.0);

  const double one_minus_mu = 1.0 / (nbar + 1.0);
  const double mu = nbar / (nbar + 1.0);
  const double t = mu * mu;
  if (t < 0.5) {
    // -ln(1 - t) / t -> 1 as t -> 0
    const double ratio = t > 0.0 ? -std::log1p(-t) / t : 1.0;
    return closed_form(1.0 - one_minus_mu * one_minus_mu * ratio);
  }
  // 1 - mu^2 = (2 nbar + 1) / (nbar + 1)^2
  const double log_gap = std::log1p(2.0 * nbar) - 2.0 * std::log1p(nbar);
  return closed_form(1.0 + one_minus_mu * one_minus_mu / t * log_gap);
}

DegreeResult degree_twin_beam_exact(double xi) {
  require_nonneg(xi, "xi");
  if (xi == 0.0) return closed_form(0.0);

  const double t = std::tanh(xi);
  const double lambda = t * t;
  const double c = std::cosh(xi);
  const double one_minus_lambda = 1.0 / (c * c);
  if (lambda < 0.5) {
    const double ratio = lambda > 0.0 ? std::atanh(lambda) / lambda : 1.0;
    return closed_form(1.0 - one_minus_lambda * one_minus_lambda * ratio);
  }
  // artanh(lambda) = (ln(1 + lambda) - ln(1 - lambda)) / 2, with 1 - lambda = 1/cosh^2
  const double artanh = 0.5 * (std::log1p(lambda) + 2.0 * std::log(c));
  return closed_form(1.0 - one_minus_lambda * one_minus_lambda / lambda * artanh);
}

QuotedValue bures_degree_twin_reference(double nbar) {
  if (!(nbar > 0.0) || !std::isfinite(nbar)) throw std::domain_error("nbar must be > 0");
  return {1.0 - 1.0 / (nbar * nbar), false};
}

namespace {

struct DegreeDispatch {
  double purity;
  DegreeResult operator()(const state::NPhotonPure& s) const { return degree_pure_n_photon(s.n); }
  DegreeResult operator()(const state::Su2Coherent& s) const { return degree_pure_n_photon(s.n); }
  DegreeResult operator()(const state::QuadratureCoherent& s) const {
    return degree_coherent_closed_form(s.nbar);
  }
  DegreeResult operator()(const state::TwinBeam& s) const { return degree_twin_beam_exact(s.xi); }
  DegreeResult operator()(const state::ThermalTotal& s) const {
    return degree_thermal_series(s.nbar);
  }
  DegreeResult operator()(const state::Custom& s) const { return hs_degree(s.dist, purity); }
};

}  // namespace

DegreeResult degree_of(const StateSpec& spec, double purity) {
  validate(spec);
  return std::visit(DegreeDispatch{purity}, spec);
}

}  // namespace polmax

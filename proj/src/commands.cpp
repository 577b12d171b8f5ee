#include "polmax/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>

#include "polmax/degree.hpp"
#include "polmax/qpsolve.hpp"
#include "polmax/serialize.hpp"
#include "polmax/sweep.hpp"

namespace polmax::cli {

using nlohmann::json;

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw UsageError("unknown format '" + s + "' (expected json or csv)");
}

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string profile_csv(const std::vector<ProfileRow>& rows) {
  std::string out = csv_line({"nbar", "N", "p"});
  for (const auto& r : rows) {
    out += csv_line({format_number(r.nbar), std::to_string(r.n), format_number(r.p)});
  }
  return out;
}

std::string mandel_csv(const std::vector<MandelRow>& rows) {
  std::string out = csv_line({"nbar", "q"});
  for (const auto& r : rows) out += csv_line({format_number(r.nbar), format_number(r.q)});
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f << text;
  f.close();
  if (!f) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace

StateSpec make_state(const DegreeOptions& o) {
  if (o.state == "nphoton") return state::NPhotonPure{o.n, o.k};
  if (o.state == "su2") return state::Su2Coherent{o.n, o.theta, o.phi};
  if (o.state == "coherent") return state::QuadratureCoherent{o.nbar};
  if (o.state == "twin") return state::TwinBeam{o.xi};
  if (o.state == "thermal") return state::ThermalTotal{o.nbar};
  if (o.state == "custom") return state::Custom{custom_distribution(o.probs)};
  throw UsageError("unknown state '" + o.state +
                   "' (expected nphoton, su2, coherent, twin, thermal or custom)");
}

std::string cmd_degree(const DegreeOptions& o, Format format) {
  const StateSpec spec = make_state(o);
  const DegreeResult r = degree_of(spec, o.purity);

  if (format == Format::Csv) {
    return csv_line({"state", "value", "method", "purity", "truncation_dim", "tail_bound"}) +
           csv_line({o.state, format_number(r.value), std::string(to_string(r.method)),
                     format_number(r.purity),
                     r.truncation_dim ? std::to_string(*r.truncation_dim) : "",
                     format_number(r.tail_bound)});
  }

  json params{{"state", o.state}};
  if (o.state == "nphoton") {
    params["n"] = o.n;
    params["k"] = o.k;
  } else if (o.state == "su2") {
    params["n"] = o.n;
    params["theta"] = o.theta;
    params["phi"] = o.phi;
  } else if (o.state == "coherent" || o.state == "thermal") {
    params["nbar"] = o.nbar;
  } else if (o.state == "twin") {
    params["xi"] = o.xi;
  } else {
    params["probs"] = o.probs;
    params["purity"] = o.purity;
  }
  return dump(envelope("degree", params, r));
}

std::string cmd_optimal(const OptimalOptions& o, Format format) {
  if (!(std::isfinite(o.nbar) && o.nbar >= 0.0)) throw UsageError("--nbar must be >= 0");

  if (o.method == "closed") {
    const auto dist = optimal_distribution(o.nbar);
    const auto degree = degree_optimal_closed_form(o.nbar);
    if (format == Format::Csv) {
      std::string out = csv_line({"N", "p"});
      for (std::size_t n = 0; n < dist.probs.size(); ++n) {
        out += csv_line({std::to_string(n), format_number(dist.probs[n])});
      }
      return out;
    }
    json data{{"distribution", dist}, {"approximate", dist.approximate}, {"degree", degree}};
    return dump(envelope("optimal", {{"nbar", o.nbar}, {"method", "closed"}}, data));
  }

  if (o.method != "qp") throw UsageError("unknown method '" + o.method + "' (expected qp or closed)");
  const int dim = o.dim.value_or(qp::default_dim(o.nbar));
  const auto problem = qp::build_problem(o.nbar, dim);
  const auto sol = qp::solve(problem, o.tol);

  if (format == Format::Csv) {
    std::string out = csv_line({"N", "p"});
    for (std::size_t n = 0; n < sol.dist.probs.size(); ++n) {
      out += csv_line({std::to_string(n), format_number(sol.dist.probs[n])});
    }
    return out;
  }
  DegreeResult degree;
  degree.value = 1.0 - sol.objective;
  degree.method = DegreeMethod::FromQp;
  degree.truncation_dim = dim;
  json data{{"solution", sol},
            {"degree", degree},
            {"support_size", qp::support_size(sol, o.tol)},
            {"kkt_pass", sol.kkt_residuals.within(o.tol)}};
  return dump(envelope("optimal",
                       {{"nbar", o.nbar}, {"dim", dim}, {"method", "qp"}, {"tol", o.tol}}, data));
}

std::string cmd_sweep(const SweepOptions& o, Format format) {
  std::vector<double> grid;
  try {
    grid = nbar_grid(o.start, o.end, o.step);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto records = sweep_parallel(grid);

  if (format == Format::Csv) {
    std::string out = csv_line({"nbar", "degree_optimal", "degree_coherent", "degree_thermal",
                                "degree_twin_exact", "mandel_q_optimal", "support_size"});
    for (const auto& r : records) {
      out += csv_line({format_number(r.nbar), format_number(r.degree_optimal),
                       format_number(r.degree_coherent), format_number(r.degree_thermal),
                       format_number(r.degree_twin_exact), format_number(r.mandel_q_optimal),
                       std::to_string(r.support_size)});
    }
    return out;
  }
  return dump(envelope("sweep", {{"start", o.start}, {"end", o.end}, {"step", o.step}}, records));
}

std::string cmd_figures(const std::filesystem::path& outdir) {
  std::error_code ec;
  std::filesystem::create_directories(outdir, ec);
  if (ec) throw std::runtime_error("cannot create " + outdir.string() + ": " + ec.message());

  write_file(outdir / "fig1.csv", profile_csv(figure1_rows()));
  write_file(outdir / "fig2.csv", mandel_csv(figure2_rows()));
  write_file(outdir / "fig3.csv", profile_csv(figure3_rows()));

  json files = json::array();
  for (const char* name : {"fig1.csv", "fig2.csv", "fig3.csv"}) {
    files.push_back((outdir / name).string());
  }
  return dump(envelope("figures", {{"outdir", outdir.string()}}, {{"files", files}}));
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

VerifyReport run_verify(const VerifyOptions& o) {
  if (o.instances < 0) throw UsageError("--instances must be >= 0");
  VerifyReport report;
  auto add = [&](std::string name, double value, double tol) {
    report.checks.push_back({std::move(name), value, tol, value <= tol});
  };

  // Random instances with 0 < nbar < D/2 <= 50.
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> pick_dim(2, 100);
  qp::KktResiduals worst;
  for (int i = 0; i < o.instances; ++i) {
    const int dim = pick_dim(rng);
    std::uniform_real_distribution<double> pick_nbar(0.0, dim / 2.0);
    double nbar = 0.0;
    while (nbar <= 0.0) nbar = pick_nbar(rng);

    const auto problem = qp::build_problem(nbar, dim);
    const auto sol = qp::solve(problem, o.tol);
    const auto r = qp::verify_kkt(problem, sol);
    worst.primal_eq = std::max(worst.primal_eq, r.primal_eq);
    worst.stationarity = std::max(worst.stationarity, r.stationarity);
    worst.dual_feasibility = std::max(worst.dual_feasibility, r.dual_feasibility);
    worst.complementarity = std::max(worst.complementarity, r.complementarity);
    report.instances.push_back({{"nbar", nbar},
                                {"dim", dim},
                                {"kkt_residuals", r},
                                {"iterations", sol.iterations},
                                {"support_size", qp::support_size(sol, o.tol)}});
  }
  add("kkt_primal_eq", worst.primal_eq, o.tol);
  add("kkt_stationarity", worst.stationarity, o.tol);
  add("kkt_dual_feasibility", worst.dual_feasibility, o.tol);
  add("kkt_complementarity", worst.complementarity, o.tol);

  double parabola_err = 0.0;
  double support_mismatch = 0.0;
  for (int m = 1; m <= 9; ++m) {
    const auto sol = qp::solve(qp::build_problem(m, 25));
    const auto closed = optimal_distribution(m);
    for (std::size_t n = 0; n < sol.dist.probs.size(); ++n) {
      const double expected = n < closed.probs.size() ? closed.probs[n] : 0.0;
      parabola_err = std::max(parabola_err, std::abs(sol.dist.probs[n] - expected));
    }
    if (qp::support_size(sol) != 2 * m + 1) support_mismatch += 1.0;
  }
  add("qp_vs_parabolic_profile", parabola_err, 1e-8);
  add("support_size_law", support_mismatch, 0.0);

  double degree_err = 0.0;
  for (int m = 0; m <= 20; ++m) {
    const auto sol = qp::solve(qp::build_problem(m, qp::default_dim(m)));
    degree_err = std::max(degree_err,
                          std::abs((1.0 - sol.objective) - degree_optimal_closed_form(m).value));
  }
  add("qp_degree_vs_closed_form", degree_err, 1e-10);

  double mandel_err = 0.0;
  for (int twice = 1; twice <= 18; ++twice) {
    const double nbar = twice / 2.0;
    const auto sol = qp::solve(qp::build_problem(nbar, qp::default_dim(nbar)));
    mandel_err = std::max(mandel_err, std::abs(mandel_q(sol.dist) - (nbar - 3.0) / 5.0));
  }
  add("mandel_q_line", mandel_err, 1e-9);

  double coherent_err = 0.0;
  double thermal_err = 0.0;
  double twin_err = 0.0;
  for (double nbar : {0.5, 1.0, 5.0, 10.0}) {
    const auto poisson = poisson_distribution(nbar, certified_dim_poisson(nbar));
    coherent_err = std::max(coherent_err, std::abs(hs_degree(poisson).value -
                                                   degree_coherent_closed_form(nbar).value));

    const double mu = nbar / (nbar + 1.0);
    const auto thermal = thermal_distribution(nbar, certified_dim_geometric(mu));
    thermal_err = std::max(thermal_err, std::abs(hs_degree(thermal).value -
                                                 degree_thermal_series(nbar).value));

    const double xi = twin_beam_squeezing(nbar);
    const double t = std::tanh(xi);
    const auto twin = twin_beam_distribution(xi, 2 * certified_dim_geometric(t * t));
    twin_err = std::max(twin_err,
                        std::abs(hs_degree(twin).value - degree_twin_beam_exact(xi).value));
  }
  add("coherent_series_vs_bessel", coherent_err, 1e-10);
  add("thermal_series_vs_closed_form", thermal_err, 1e-9);
  add("twin_series_vs_closed_form", twin_err, 1e-9);
  return report;
}

std::string cmd_verify(const VerifyOptions& o, Format format, bool& passed) {
  const auto report = run_verify(o);
  passed = report.passed();

  if (format == Format::Csv) {
    std::string out = csv_line({"check", "value", "tolerance", "passed"});
    for (const auto& c : report.checks) {
      out += csv_line({c.name, format_number(c.value), format_number(c.tolerance),
                       c.passed ? "true" : "false"});
    }
    return out;
  }
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back(
        {{"name", c.name}, {"value", c.value}, {"tolerance", c.tolerance}, {"passed", c.passed}});
  }
  json data{{"passed", passed}, {"checks", checks}, {"instances", report.instances}};
  return dump(envelope(
      "verify", {{"instances", o.instances}, {"seed", o.seed}, {"tol", o.tol}}, data));
}

}  // namespace polmax::cli

// polmax: degrees of polarization, maximally polarized photon statistics and
// figure data for two-mode quantum light.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "polmax/commands.hpp"
#include "polmax/qpsolve.hpp"

namespace {

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    std::cout.flush();
    return std::cout ? 0 : 1;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "polmax: cannot open " << out_path << " for writing\n";
    return 1;
  }
  f << text;
  return f ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace polmax::cli;

  CLI::App app{"Hilbert-Schmidt degree of polarization and maximally polarized states", "polmax"};
  app.require_subcommand(1);

  std::string format_name = "json";
  std::string out_path;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->add_option("--out", out_path, "Write output to this file instead of stdout");
  };

  DegreeOptions degree;
  auto* degree_cmd = app.add_subcommand("degree", "Degree of polarization of a catalog state");
  degree_cmd->add_option("--state", degree.state, "nphoton | su2 | coherent | twin | thermal | custom")
      ->required()
      ->check(CLI::IsMember({"nphoton", "su2", "coherent", "twin", "thermal", "custom"}));
  degree_cmd->add_option("--n", degree.n, "Photon number (nphoton, su2)");
  degree_cmd->add_option("--k", degree.k, "Photons in the H mode (nphoton)");
  degree_cmd->add_option("--theta", degree.theta, "Polar angle on the Poincare sphere (su2)");
  degree_cmd->add_option("--phi", degree.phi, "Azimuth on the Poincare sphere (su2)");
  degree_cmd->add_option("--nbar", degree.nbar, "Mean photon number (coherent, thermal)");
  degree_cmd->add_option("--xi", degree.xi, "Squeezing parameter (twin)");
  degree_cmd->add_option("--probs", degree.probs, "Photon-number probabilities p_0,p_1,... (custom)")
      ->delimiter(',');
  degree_cmd->add_option("--purity", degree.purity, "State purity Tr(rho^2) (custom)")
      ->capture_default_str();
  add_common(degree_cmd);

  OptimalOptions optimal;
  int dim = -1;
  auto* optimal_cmd = app.add_subcommand("optimal", "Maximally polarized photon-number distribution");
  optimal_cmd->add_option("--nbar", optimal.nbar, "Mean photon number")->required();
  optimal_cmd->add_option("--dim", dim, "Truncation D (default ceil(2 nbar) + 4)");
  optimal_cmd->add_option("--method", optimal.method, "qp | closed")
      ->check(CLI::IsMember({"qp", "closed"}))
      ->capture_default_str();
  optimal_cmd->add_option("--tol", optimal.tol, "Solver tolerance")->capture_default_str();
  add_common(optimal_cmd);

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Degrees of all catalog states over a grid of nbar");
  sweep_cmd->add_option("--start", sweep.start, "First nbar")->required();
  sweep_cmd->add_option("--end", sweep.end, "Last nbar")->required();
  sweep_cmd->add_option("--step", sweep.step, "Grid step")->capture_default_str();
  add_common(sweep_cmd);

  std::string outdir;
  auto* figures_cmd = app.add_subcommand("figures", "Write fig1.csv, fig2.csv and fig3.csv");
  figures_cmd->add_option("--outdir", outdir, "Directory for the CSV files")->required();
  figures_cmd->add_option("--out", out_path, "Write the JSON summary to this file");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "KKT audit and closed-form self-checks");
  verify_cmd->add_option("--instances", verify.instances, "Random QP instances to audit")
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "Seed for the random instances")
      ->capture_default_str();
  verify_cmd->add_option("--tol", verify.tol, "KKT residual tolerance")->capture_default_str();
  add_common(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    const Format format = parse_format(format_name);
    if (*degree_cmd) return emit(cmd_degree(degree, format), out_path);
    if (*optimal_cmd) {
      if (dim >= 0) optimal.dim = dim;
      return emit(cmd_optimal(optimal, format), out_path);
    }
    if (*sweep_cmd) return emit(cmd_sweep(sweep, format), out_path);
    if (*figures_cmd) return emit(cmd_figures(outdir), out_path);
    if (*verify_cmd) {
      bool passed = false;
      const int rc = emit(cmd_verify(verify, format, passed), out_path);
      if (!passed) std::cerr << "polmax: verify found failing checks\n";
      return rc != 0 ? rc : (passed ? 0 : 1);
    }
  } catch (const UsageError& e) {
    std::cerr << "polmax: usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "polmax: invalid parameter: " << e.what() << "\n";
    return 2;
  } catch (const polmax::qp::InfeasibleError& e) {
    std::cerr << "polmax: infeasible: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "polmax: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

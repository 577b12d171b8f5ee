#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "polmax/distributions.hpp"

namespace polmax::cli {

// Subcommand bodies of the `polmax` tool. Each returns the text destined for
// the output stream and throws on bad input; the executable maps exceptions to
// a message on stderr and a nonzero exit code.

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Format { Json, Csv };

Format parse_format(const std::string& s);

struct DegreeOptions {
  std::string state;  // nphoton | su2 | coherent | twin | thermal | custom
  int n = 0;
  int k = 0;
  double theta = 0.0;
  double phi = 0.0;
  double nbar = 0.0;
  double xi = 0.0;
  std::vector<double> probs;
  double purity = 1.0;
};

StateSpec make_state(const DegreeOptions& opts);
std::string cmd_degree(const DegreeOptions& opts, Format format);

struct OptimalOptions {
  double nbar = 0.0;
  std::optional<int> dim;
  std::string method = "qp";  // qp | closed
  double tol = 1e-10;
};

std::string cmd_optimal(const OptimalOptions& opts, Format format);

struct SweepOptions {
  double start = 0.0;
  double end = 0.0;
  double step = 0.1;
};

std::string cmd_sweep(const SweepOptions& opts, Format format);

/// Writes fig1.csv, fig2.csv and fig3.csv into `outdir` (created if missing)
/// and returns a JSON summary naming the files.
std::string cmd_figures(const std::filesystem::path& outdir);

struct VerifyOptions {
  int instances = 50;
  std::uint64_t seed = 20061;
  double tol = 1e-10;
};

struct VerifyCheck {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  nlohmann::json instances = nlohmann::json::array();
  bool passed() const;
};

/// KKT audit on random (nbar, D) with 0 < nbar < D/2 <= 50, followed by the
/// closed-form and series oracles.
VerifyReport run_verify(const VerifyOptions& opts);
std::string cmd_verify(const VerifyOptions& opts, Format format, bool& passed);

}  // namespace polmax::cli

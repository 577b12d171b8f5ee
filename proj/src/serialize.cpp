#include "polmax/serialize.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace polmax {

using nlohmann::json;

void to_json(json& j, const PhotonDistribution& d) {
  j = json{{"probs", d.probs},
           {"declared_mean", d.declared_mean},
           {"tail_bound", d.tail_bound},
           {"mean_tail_bound", d.mean_tail_bound},
           {"approximate", d.approximate}};
}

void from_json(const json& j, PhotonDistribution& d) {
  j.at("probs").get_to(d.probs);
  j.at("declared_mean").get_to(d.declared_mean);
  j.at("tail_bound").get_to(d.tail_bound);
  d.mean_tail_bound = j.value("mean_tail_bound", 0.0);
  d.approximate = j.value("approximate", false);
}

void to_json(json& j, const DegreeResult& r) {
  j = json{{"value", r.value},
           {"method", std::string(to_string(r.method))},
           {"purity", r.purity},
           {"truncation_dim", r.truncation_dim ? json(*r.truncation_dim) : json(nullptr)},
           {"tail_bound", r.tail_bound}};
}

void from_json(const json& j, DegreeResult& r) {
  j.at("value").get_to(r.value);
  r.method = degree_method_from_string(j.at("method").get<std::string>());
  j.at("purity").get_to(r.purity);
  const auto& dim = j.at("truncation_dim");
  r.truncation_dim = dim.is_null() ? std::nullopt : std::optional<int>(dim.get<int>());
  j.at("tail_bound").get_to(r.tail_bound);
}

void to_json(json& j, const SweepRecord& r) {
  j = json{{"nbar", r.nbar},
           {"degree_optimal", r.degree_optimal},
           {"degree_coherent", r.degree_coherent},
           {"degree_thermal", r.degree_thermal},
           {"degree_twin_exact", r.degree_twin_exact},
           {"mandel_q_optimal", r.mandel_q_optimal},
           {"support_size", r.support_size}};
}

void from_json(const json& j, SweepRecord& r) {
  j.at("nbar").get_to(r.nbar);
  j.at("degree_optimal").get_to(r.degree_optimal);
  j.at("degree_coherent").get_to(r.degree_coherent);
  j.at("degree_thermal").get_to(r.degree_thermal);
  j.at("degree_twin_exact").get_to(r.degree_twin_exact);
  j.at("mandel_q_optimal").get_to(r.mandel_q_optimal);
  j.at("support_size").get_to(r.support_size);
}

namespace qp {

void to_json(json& j, const Multipliers& m) {
  j = json{{"lambda0", m.normalization}, {"lambda1", m.mean}};
}

void from_json(const json& j, Multipliers& m) {
  j.at("lambda0").get_to(m.normalization);
  j.at("lambda1").get_to(m.mean);
}

void to_json(json& j, const KktResiduals& r) {
  j = json{{"primal_eq", r.primal_eq},
           {"stationarity", r.stationarity},
           {"dual_feasibility", r.dual_feasibility},
           {"complementarity", r.complementarity}};
}

void from_json(const json& j, KktResiduals& r) {
  j.at("primal_eq").get_to(r.primal_eq);
  j.at("stationarity").get_to(r.stationarity);
  j.at("dual_feasibility").get_to(r.dual_feasibility);
  j.at("complementarity").get_to(r.complementarity);
}

void to_json(json& j, const QpSolution& s) {
  j = json{{"dist", s.dist},
           {"multipliers", s.multipliers},
           {"active_set", s.active_set},
           {"objective", s.objective},
           {"kkt_residuals", s.kkt_residuals},
           {"iterations", s.iterations}};
}

void from_json(const json& j, QpSolution& s) {
  j.at("dist").get_to(s.dist);
  j.at("multipliers").get_to(s.multipliers);
  j.at("active_set").get_to(s.active_set);
  j.at("objective").get_to(s.objective);
  j.at("kkt_residuals").get_to(s.kkt_residuals);
  j.at("iterations").get_to(s.iterations);
}

}  // namespace qp

json envelope(std::string_view command, json parameters, json data) {
  return json{{"schema_version", std::string(kSchemaVersion)},
              {"command", std::string(command)},
              {"parameters", std::move(parameters)},
              {"data", std::move(data)}};
}

std::string format_number(double x, int digits) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  std::array<char, 64> buf{};
  // Round to `digits` significant digits, then print the shortest form of the
  // rounded value so 0.4 does not come out as 0.400000000000.
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                 std::chars_format::scientific, digits - 1);
  double rounded = 0.0;
  std::from_chars(buf.data(), ptr, rounded);
  auto [end, ec2] = std::to_chars(buf.data(), buf.data() + buf.size(), rounded);
  (void)ec;
  (void)ec2;
  return std::string(buf.data(), end);
}

std::string csv_line(std::initializer_list<std::string> fields) {
  std::string out;
  bool first = true;
  for (const auto& f : fields) {
    if (!first) out += ',';
    out += f;
    first = false;
  }
  out += '\n';
  return out;
}

}  // namespace polmax

#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "polmax/degree.hpp"
#include "polmax/distributions.hpp"
#include "polmax/qpsolve.hpp"
#include "polmax/sweep.hpp"

namespace polmax {

inline constexpr std::string_view kSchemaVersion = "1";

void to_json(nlohmann::json& j, const PhotonDistribution& d);
void from_json(const nlohmann::json& j, PhotonDistribution& d);

void to_json(nlohmann::json& j, const DegreeResult& r);
void from_json(const nlohmann::json& j, DegreeResult& r);

void to_json(nlohmann::json& j, const SweepRecord& r);
void from_json(const nlohmann::json& j, SweepRecord& r);

namespace qp {
void to_json(nlohmann::json& j, const Multipliers& m);
void from_json(const nlohmann::json& j, Multipliers& m);
void to_json(nlohmann::json& j, const KktResiduals& r);
void from_json(const nlohmann::json& j, KktResiduals& r);
void to_json(nlohmann::json& j, const QpSolution& s);
void from_json(const nlohmann::json& j, QpSolution& s);
}  // namespace qp

/// {"schema_version": "1", "command": ..., "parameters": ..., "data": ...}
nlohmann::json envelope(std::string_view command, nlohmann::json parameters, nlohmann::json data);

/// Locale-independent shortest form with at most `digits` significant digits.
std::string format_number(double x, int digits = 12);

/// Joins already formatted fields with commas and terminates the line with '\n'.
std::string csv_line(std::initializer_list<std::string> fields);

}  // namespace polmax

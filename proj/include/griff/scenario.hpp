// Scenario files and report serialization. Rationals travel as "p/q" strings
// (bare "p" when the denominator is 1); every other number is a JSON integer.

#pragma once

#include <string>

#include <json.hpp>

#include "griff/chow.hpp"
#include "griff/heights.hpp"
#include "griff/milnor.hpp"

namespace griff {

struct Scenario {
    PencilGeometry geom;
    SingularFiberData fibers;
};

// Field names are fixed: N, d, deg_E, deg_M, fibers[{delta, count}].
// Throws std::invalid_argument on malformed input.
Scenario scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_to_json(const Scenario& s);

// {"N": ..., "components": [{"m", "chi_open"}], "pairs": [{"m_i", "m_j", "chi_open"}]}
StratificationData stratification_from_json(const nlohmann::json& j);

// A bare array of {"exponents": [...], "coeff": "p/q"} records; the variable
// count and degree are inferred and must be consistent across records.
HomogeneousPoly polynomial_from_json(const nlohmann::json& j);

// Fiber data accepted either as a bare array or under a "fibers" key.
SingularFiberData fibers_from_json(const nlohmann::json& j);

nlohmann::json rational_to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json height_report_to_json(const HeightReport& r);

nlohmann::json load_json_file(const std::string& path);  // throws std::invalid_argument

}  // namespace griff

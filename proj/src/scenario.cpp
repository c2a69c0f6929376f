#include "griff/scenario.hpp"

#include <fstream>
#include <stdexcept>

namespace griff {

using nlohmann::json;

namespace {

long long require_int(const json& j, const char* field) {
    if (!j.contains(field) || !j.at(field).is_number_integer())
        throw std::invalid_argument(std::string("missing or non-integer field '") + field + "'");
    return j.at(field).get<long long>();
}

}  // namespace

Scenario scenario_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("scenario: expected a JSON object");
    Scenario s;
    const long long N = require_int(j, "N");
    const long long d = require_int(j, "d");
    const long long deg_E = require_int(j, "deg_E");
    const long long deg_M = require_int(j, "deg_M");
    if (N < 1) throw std::invalid_argument("scenario: N must be a positive integer");
    if (d < 2) throw std::invalid_argument("scenario: d must be >= 2");
    s.geom = PencilGeometry(static_cast<int>(N), static_cast<int>(d), Integer(deg_E), Integer(deg_M));
    if (!j.contains("fibers") || !j.at("fibers").is_array())
        throw std::invalid_argument("scenario: missing 'fibers' array");
    for (const json& f : j.at("fibers")) {
        FiberEntry entry;
        entry.delta = static_cast<int>(require_int(f, "delta"));
        entry.count = require_int(f, "count");
        s.fibers.entries.push_back(entry);
    }
    try {
        s.fibers.validate();
    } catch (const std::domain_error& e) {
        throw std::invalid_argument(e.what());
    }
    return s;
}

json scenario_to_json(const Scenario& s) {
    json fibers = json::array();
    for (const FiberEntry& f : s.fibers.entries) {
        fibers.push_back({{"delta", f.delta}, {"count", f.count}});
    }
    return json{{"N", s.geom.N},
                {"d", s.geom.d},
                {"deg_E", s.geom.deg_e.to_long_long()},
                {"deg_M", s.geom.deg_m.to_long_long()},
                {"fibers", fibers}};
}

StratificationData stratification_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("stratification: expected a JSON object");
    StratificationData data;
    data.N = static_cast<int>(require_int(j, "N"));
    if (data.N < 1) throw std::invalid_argument("stratification: N must be positive");
    if (j.contains("components")) {
        for (const json& c : j.at("components")) {
            StratComponent comp;
            comp.multiplicity = require_int(c, "m");
            comp.chi_open = Integer(require_int(c, "chi_open"));
            if (comp.multiplicity < 1) throw std::invalid_argument("stratification: multiplicity must be positive");
            data.components.push_back(comp);
        }
    }
    if (j.contains("pairs")) {
        for (const json& p : j.at("pairs")) {
            StratPair pair;
            pair.multiplicity_i = require_int(p, "m_i");
            pair.multiplicity_j = require_int(p, "m_j");
            pair.chi_open = Integer(require_int(p, "chi_open"));
            if (pair.multiplicity_i < 1 || pair.multiplicity_j < 1)
                throw std::invalid_argument("stratification: multiplicity must be positive");
            data.pairs.push_back(pair);
        }
    }
    return data;
}

HomogeneousPoly polynomial_from_json(const json& j) {
    const json* records = &j;
    if (j.is_object() && j.contains("terms")) records = &j.at("terms");
    if (!records->is_array() || records->empty())
        throw std::invalid_argument("polynomial: expected a nonempty array of term records");

    int num_vars = -1;
    int degree = -1;
    std::vector<std::pair<ExponentVec, Rational>> terms;
    for (const json& rec : *records) {
        if (!rec.contains("exponents") || !rec.at("exponents").is_array())
            throw std::invalid_argument("polynomial: term missing 'exponents' array");
        ExponentVec exps;
        int total = 0;
        for (const json& e : rec.at("exponents")) {
            if (!e.is_number_integer() || e.get<long long>() < 0)
                throw std::invalid_argument("polynomial: exponents must be nonnegative integers");
            exps.push_back(static_cast<int>(e.get<long long>()));
            total += exps.back();
        }
        if (num_vars < 0) num_vars = static_cast<int>(exps.size());
        if (static_cast<int>(exps.size()) != num_vars)
            throw std::invalid_argument("polynomial: inconsistent number of variables");
        if (degree < 0) degree = total;
        if (total != degree)
            throw std::invalid_argument("polynomial: input is not homogeneous");
        if (!rec.contains("coeff"))
            throw std::invalid_argument("polynomial: term missing 'coeff'");
        terms.emplace_back(std::move(exps), rational_from_json(rec.at("coeff")));
    }
    if (num_vars < 1 || degree < 1)
        throw std::invalid_argument("polynomial: need at least one variable and positive degree");
    HomogeneousPoly F(num_vars, degree);
    for (auto& [exps, coeff] : terms) F.add_term(exps, coeff);
    return F;
}

SingularFiberData fibers_from_json(const json& j) {
    const json* arr = &j;
    if (j.is_object() && j.contains("fibers")) arr = &j.at("fibers");
    if (!arr->is_array()) throw std::invalid_argument("fibers: expected an array");
    SingularFiberData fibers;
    for (const json& f : *arr) {
        FiberEntry entry;
        entry.delta = static_cast<int>(require_int(f, "delta"));
        entry.count = require_int(f, "count");
        fibers.entries.push_back(entry);
    }
    try {
        fibers.validate();
    } catch (const std::domain_error& e) {
        throw std::invalid_argument(e.what());
    }
    return fibers;
}

json rational_to_json(const Rational& q) { return q.to_string(); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string()) throw std::invalid_argument("rational: expected \"p/q\" string or integer");
    try {
        return Rational::from_string(j.get<std::string>());
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("rational: ") + e.what());
    }
}

json height_report_to_json(const HeightReport& r) {
    return json{{"ht_int", rational_to_json(r.ht_int)},
                {"count_lhs", r.count_lhs.to_string()},
                {"count_rhs", rational_to_json(r.count_rhs)},
                {"feasible", r.feasible},
                {"stable_height_weight_formula", rational_to_json(r.stable_height_weights)},
                {"stable_height_chow_integrals", rational_to_json(r.stable_height_integrals)},
                {"routes_agree", r.routes_agree}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("JSON parse error in ") + path + ": " + e.what());
    }
    return j;
}

}  // namespace griff

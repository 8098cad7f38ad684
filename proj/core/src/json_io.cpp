#include "bmfp/json_io.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

namespace bmfp {

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open file: " + path);
    }
    return Json::parse(in);  // nlohmann reports the byte position on failure
}

double parse_real(const Json& value, const std::string& field) {
    if (value.is_number()) {
        return value.get<double>();
    }
    if (value.is_string()) {
        const std::string s = value.get<std::string>();
        if (s.starts_with("sqrt(") && s.ends_with(")")) {
            const std::string inner = s.substr(5, s.size() - 6);
            std::size_t consumed = 0;
            double radicand = 0.0;
            try {
                radicand = std::stod(inner, &consumed);
            } catch (const std::exception&) {
                consumed = 0;
            }
            if (!inner.empty() && consumed == inner.size() && radicand >= 0.0) {
                return std::sqrt(radicand);
            }
        }
        throw std::invalid_argument(field + ": cannot parse \"" + s +
                                    "\" (expected a number or \"sqrt(<number>)\")");
    }
    throw std::invalid_argument(field + ": expected a number or \"sqrt(<number>)\"");
}

namespace {

const Json& require_field(const Json& j, const std::string& key, const std::string& context) {
    if (!j.is_object() || !j.contains(key)) {
        throw std::invalid_argument(context + ": missing field \"" + key + "\"");
    }
    return j.at(key);
}

}  // namespace

SpaceInput parse_space_input(const Json& j) {
    SpaceInput input;

    const Json& points = require_field(j, "points", "space");
    if (!points.is_array()) {
        throw std::invalid_argument("space: \"points\" must be an array of strings");
    }
    for (const auto& p : points) {
        if (!p.is_string()) {
            throw std::invalid_argument("space: \"points\" must be an array of strings");
        }
        input.points.push_back(p.get<std::string>());
    }
    if (input.points.empty()) {
        throw std::invalid_argument("space: \"points\" must not be empty");
    }

    std::set<std::string> seen(input.points.begin(), input.points.end());
    if (seen.size() != input.points.size()) {
        throw std::invalid_argument("space: point labels must be unique");
    }

    const Json& rows = require_field(j, "distances", "space");
    if (!rows.is_array()) {
        throw std::invalid_argument("space: \"distances\" must be a matrix");
    }
    for (const auto& row : rows) {
        if (!row.is_array()) {
            throw std::invalid_argument("space: \"distances\" must be a matrix");
        }
        std::vector<double> r;
        for (const auto& v : row) {
            if (!v.is_number()) {
                throw std::invalid_argument("space: distance entries must be numbers");
            }
            r.push_back(v.get<double>());
        }
        input.distances.push_back(std::move(r));
    }
    if (input.distances.size() != input.points.size()) {
        throw std::invalid_argument("space: matrix side must equal the number of points");
    }
    for (const auto& row : input.distances) {
        if (row.size() != input.points.size()) {
            throw std::invalid_argument("space: matrix side must equal the number of points");
        }
    }

    input.coefficient = parse_real(require_field(j, "coefficient", "space"), "coefficient");
    return input;
}

FiniteBMetricSpace space_from_json(const Json& j, const Tolerance& tol) {
    SpaceInput input = parse_space_input(j);
    return FiniteBMetricSpace(std::move(input.points), std::move(input.distances),
                              input.coefficient, tol);
}

Json space_to_json(const FiniteBMetricSpace& space) {
    Json j;
    j["points"] = space.points();
    j["distances"] = space.distances();
    j["coefficient"] = space.coefficient();
    return j;
}

std::map<std::string, std::string> map_table_from_json(const Json& j) {
    const Json& table = require_field(j, "table", "map");
    if (!table.is_object()) {
        throw std::invalid_argument("map: \"table\" must be an object of point -> image");
    }
    std::map<std::string, std::string> out;
    for (const auto& [from, to] : table.items()) {
        if (!to.is_string()) {
            throw std::invalid_argument("map: images must be point labels (strings)");
        }
        out[from] = to.get<std::string>();
    }
    return out;
}

Json map_table_to_json(const std::map<std::string, std::string>& table) {
    Json j;
    j["table"] = Json::object();
    for (const auto& [from, to] : table) {
        j["table"][from] = to;
    }
    return j;
}

FunctionSuite suite_from_json(const Json& j) {
    FunctionSuite suite;

    const Json& theta = require_field(j, "theta", "suite");
    const std::string theta_kind = require_field(theta, "kind", "suite.theta").get<std::string>();
    if (theta_kind == "affine_plus_one") {
        suite.theta = ThetaFunction::affine_plus_one();
    } else if (theta_kind == "exponential") {
        suite.theta = ThetaFunction::exponential();
    } else {
        throw std::invalid_argument("suite.theta: unknown kind \"" + theta_kind + "\"");
    }

    const Json& fc = require_field(j, "fc", "suite");
    const std::string fc_kind = require_field(fc, "kind", "suite.fc").get<std::string>();
    if (fc_kind != "ratio") {
        throw std::invalid_argument("suite.fc: unknown kind \"" + fc_kind + "\"");
    }
    double c = 1.0;
    if (fc.contains("c")) {
        c = parse_real(fc.at("c"), "suite.fc.c");
    }
    if (!(c >= 1.0)) {
        throw std::invalid_argument("suite.fc.c must be >= 1");
    }
    suite.fc = FcOperator::ratio(c);

    const Json& sim = require_field(j, "j", "suite");
    const std::string sim_kind = require_field(sim, "kind", "suite.j").get<std::string>();
    if (sim_kind != "scaled_ratio") {
        throw std::invalid_argument("suite.j: unknown kind \"" + sim_kind + "\"");
    }
    const double k = parse_real(require_field(sim, "k", "suite.j"), "suite.j.k");
    if (!(k > 0.0)) {
        throw std::invalid_argument("suite.j.k must be > 0");
    }
    suite.j = SimulationFunction::scaled_ratio(k);

    return suite;
}

Json suite_to_json(const FunctionSuite& suite) {
    Json j;
    j["theta"] = {{"kind", suite.theta.name()}};
    j["fc"] = {{"kind", suite.fc.name()}, {"c", suite.fc.c}};
    j["j"] = {{"kind", suite.j.name()}, {"k", suite.j.k}};
    return j;
}

Json to_json(const ValidationReport& report, const std::vector<std::string>* labels) {
    Json j;
    j["verdict"] = report.passed() ? "pass" : "fail";
    j["violations"] = Json::array();
    for (const auto& v : report.violations) {
        Json entry;
        entry["axiom"] = axiom_id(v.axiom);
        entry["indices"] = v.where;
        if (labels != nullptr) {
            Json names = Json::array();
            for (const std::size_t i : v.where) {
                names.push_back(i < labels->size() ? (*labels)[i] : "?");
            }
            entry["labels"] = names;
        }
        entry["lhs"] = v.lhs;
        entry["rhs"] = v.rhs;
        j["violations"].push_back(entry);
    }
    return j;
}

Json to_json(const PairRecord& record) {
    Json j;
    j["pair"] = {record.x, record.y};
    j["image_distance"] = record.image_distance;
    j["argument_distance"] = record.argument_distance;
    j["j_value"] = record.j_value;
    j["margin"] = record.margin;
    return j;
}

Json to_json(const ContractionCertificate& certificate) {
    Json j;
    j["condition"] = condition_id(certificate.condition);
    j["verdict"] = certificate.certified ? "certified" : "refuted";
    j["c"] = certificate.c;
    j["min_margin"] = certificate.min_margin ? Json(*certificate.min_margin) : Json(nullptr);
    j["records"] = Json::array();
    for (const auto& r : certificate.records) {
        j["records"].push_back(to_json(r));
    }
    j["witnesses"] = Json::array();
    for (const auto& w : certificate.witnesses) {
        j["witnesses"].push_back(to_json(w));
    }
    return j;
}

Json to_json(const Trajectory& trajectory) {
    Json j;
    j["seed"] = trajectory.seed;
    j["visited"] = trajectory.visited;
    j["step_distances"] = trajectory.step_distances;
    if (const auto* fp = std::get_if<FixedPointOutcome>(&trajectory.outcome)) {
        j["outcome"] = {{"kind", "fixed_point"}, {"point", fp->point}, {"step", fp->step}};
    } else {
        const auto& cycle = std::get<CycleOutcome>(trajectory.outcome);
        j["outcome"] = {{"kind", "cycle"}, {"period", cycle.period}, {"entry", cycle.entry}};
    }
    return j;
}

Json to_json(const FixedPointReport& report) {
    Json j;
    j["fixed_points"] = report.fixed_points;
    j["unique"] = report.unique;
    if (report.consistent) {
        j["consistent"] = *report.consistent;
    }
    return j;
}

Json to_json(const ConsequenceReport& report) {
    Json j;
    switch (report.status) {
        case ConsequenceReport::Status::Pass: j["status"] = "pass"; break;
        case ConsequenceReport::Status::Fail: j["status"] = "fail"; break;
        case ConsequenceReport::Status::NotApplicable: j["status"] = "not_applicable"; break;
    }
    j["detail"] = report.detail;
    j["fixed_points"] = report.fixed_points;
    if (report.offending_seed) {
        j["offending_seed"] = *report.offending_seed;
    }
    j["warnings"] = report.warnings;
    return j;
}

Json to_json(const MembershipRuling& ruling) {
    return Json{{"member", ruling.member}, {"justification", ruling.justification}};
}

Json to_json(const ContinuityRuling& ruling) {
    return Json{{"continuous", ruling.continuous}, {"justification", ruling.justification}};
}

Json to_json(const DemoReport& report) {
    Json j;
    j["case"] = demo_case_id(report.which);
    j["validation"] = to_json(report.validation);
    j["declared_coefficient"] = report.declared_coefficient;
    j["minimal_coefficient"] = report.minimal_coefficient;
    j["membership"] = to_json(report.membership);
    j["basic_certificate"] = to_json(report.basic);
    if (report.generalized) {
        j["generalized_certificate"] = to_json(*report.generalized);
    }
    if (report.continuity) {
        j["b_continuity"] = to_json(*report.continuity);
    }
    j["trajectories"] = Json::array();
    for (const auto& t : report.trajectories) {
        j["trajectories"].push_back(to_json(t));
    }
    j["fixed_points"] = to_json(report.fixed_points);
    j["consequence"] = to_json(report.consequence);
    j["ok"] = report.ok();
    return j;
}

}  // namespace bmfp

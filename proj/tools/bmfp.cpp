// bmfp: validate finite b-metric spaces, certify contraction conditions,
// and run fixed-point iterations, from JSON inputs.
//
// Exit codes: 0 the checked claim holds, 1 the claim is refuted with a
// witness, 2 malformed or inconsistent input.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "bmfp/demo.hpp"
#include "bmfp/json_io.hpp"
#include "bmfp/render.hpp"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitBadInput = 2;

struct GlobalOptions {
    std::string format = "table";
    int precision = 6;
    bmfp::Tolerance tolerance;
};

bool use_json(const GlobalOptions& g) { return g.format == "json"; }

void emit(const bmfp::Json& j) { std::cout << j.dump(2) << "\n"; }

double parse_real_text(const std::string& text, const std::string& field) {
    try {
        std::size_t consumed = 0;
        const double v = std::stod(text, &consumed);
        if (consumed == text.size()) return v;
    } catch (const std::exception&) {
    }
    return bmfp::parse_real(bmfp::Json(text), field);
}

int cmd_validate(const GlobalOptions& g, const std::string& space_path,
                 const std::optional<std::string>& coefficient_text) {
    const bmfp::Json j = bmfp::load_json_file(space_path);
    bmfp::SpaceInput input = bmfp::parse_space_input(j);
    const double coefficient = coefficient_text
                                   ? parse_real_text(*coefficient_text, "coefficient")
                                   : input.coefficient;

    const bmfp::ValidationReport report =
        bmfp::validate_axioms(input.distances, coefficient, g.tolerance);

    std::optional<double> minimal;
    try {
        minimal = bmfp::minimal_coefficient(input.distances, g.tolerance);
    } catch (const std::exception&) {
        // axioms (i)/(ii) fail; the report already carries the witnesses
    }

    if (use_json(g)) {
        bmfp::Json out;
        out["validation"] = bmfp::to_json(report, &input.points);
        out["declared_coefficient"] = coefficient;
        out["minimal_coefficient"] = minimal ? bmfp::Json(*minimal) : bmfp::Json(nullptr);
        emit(out);
    } else {
        std::cout << bmfp::render_validation(report, &input.points, g.precision);
        std::cout << "declared coefficient: " << bmfp::format_number(coefficient, g.precision)
                  << "\n";
        std::cout << "minimal coefficient: "
                  << (minimal ? bmfp::format_number(*minimal, g.precision)
                              : std::string("undefined"))
                  << "\n";
    }
    return report.passed() ? kExitHolds : kExitRefuted;
}

int cmd_coefficient(const GlobalOptions& g, const std::string& space_path) {
    const bmfp::Json j = bmfp::load_json_file(space_path);
    bmfp::SpaceInput input = bmfp::parse_space_input(j);

    try {
        const double minimal = bmfp::minimal_coefficient(input.distances, g.tolerance);
        if (use_json(g)) {
            emit(bmfp::Json{{"minimal_coefficient", minimal}});
        } else {
            std::cout << "minimal coefficient: " << bmfp::format_number(minimal, g.precision)
                      << "\n";
        }
        return kExitHolds;
    } catch (const std::invalid_argument&) {
        // Not a b-metric candidate: report the entry-axiom witnesses.
        const bmfp::ValidationReport report =
            bmfp::validate_axioms(input.distances, /*coefficient=*/1.0, g.tolerance);
        bmfp::ValidationReport entry_only;
        for (const auto& v : report.violations) {
            if (v.axiom != bmfp::Axiom::Triangle) entry_only.violations.push_back(v);
        }
        if (use_json(g)) {
            emit(bmfp::Json{{"minimal_coefficient", nullptr},
                            {"validation", bmfp::to_json(entry_only, &input.points)}});
        } else {
            std::cout << "minimal coefficient: undefined\n"
                      << bmfp::render_validation(entry_only, &input.points, g.precision);
        }
        return kExitRefuted;
    }
}

int cmd_certify(const GlobalOptions& g, const std::string& space_path,
                const std::string& map_path, const std::string& suite_path,
                const std::string& theorem) {
    const bmfp::FiniteBMetricSpace space =
        bmfp::space_from_json(bmfp::load_json_file(space_path), g.tolerance);
    const bmfp::SelfMap map =
        bmfp::bind_self_map(space, bmfp::map_table_from_json(bmfp::load_json_file(map_path)));
    const bmfp::FunctionSuite suite = bmfp::suite_from_json(bmfp::load_json_file(suite_path));

    const bmfp::MembershipRuling membership =
        bmfp::scaled_ratio_membership(suite.j.k, space.coefficient(), g.tolerance);
    if (!membership.member) {
        std::cerr << "warning: suite is not a proved member at this coefficient: "
                  << membership.justification << "\n";
    }

    const bmfp::ContractionCertificate certificate =
        theorem == "generalized" ? bmfp::certify_generalized(space, map, suite, g.tolerance)
                                 : bmfp::certify_basic(space, map, suite, g.tolerance);

    if (use_json(g)) {
        bmfp::Json out;
        out["membership"] = bmfp::to_json(membership);
        out["certificate"] = bmfp::to_json(certificate);
        emit(out);
    } else {
        std::cout << bmfp::render_membership(membership);
        std::cout << bmfp::render_certificate(certificate, g.precision);
    }
    return certificate.certified ? kExitHolds : kExitRefuted;
}

int cmd_iterate(const GlobalOptions& g, const std::string& space_path,
                const std::string& map_path, const std::string& seed,
                std::optional<std::size_t> max_steps) {
    const bmfp::FiniteBMetricSpace space =
        bmfp::space_from_json(bmfp::load_json_file(space_path), g.tolerance);
    const bmfp::SelfMap map =
        bmfp::bind_self_map(space, bmfp::map_table_from_json(bmfp::load_json_file(map_path)));

    const bmfp::Trajectory trajectory = bmfp::picard_iterate(space, map, seed, max_steps);
    if (use_json(g)) {
        emit(bmfp::to_json(trajectory));
    } else {
        std::cout << bmfp::render_trajectory(trajectory, g.precision);
    }
    return trajectory.is_fixed_point() ? kExitHolds : kExitRefuted;
}

int cmd_fixed_points(const GlobalOptions& g, const std::string& space_path,
                     const std::string& map_path) {
    const bmfp::FiniteBMetricSpace space =
        bmfp::space_from_json(bmfp::load_json_file(space_path), g.tolerance);
    const bmfp::SelfMap map =
        bmfp::bind_self_map(space, bmfp::map_table_from_json(bmfp::load_json_file(map_path)));

    const bmfp::FixedPointReport report = bmfp::enumerate_fixed_points(space, map);
    if (use_json(g)) {
        emit(bmfp::to_json(report));
    } else {
        std::cout << bmfp::render_fixed_points(report);
    }
    return report.unique ? kExitHolds : kExitRefuted;
}

int cmd_demo(const GlobalOptions& g, const std::string& selector) {
    const bmfp::DemoCase which = bmfp::demo_case_from_string(selector);
    const bmfp::DemoReport report = bmfp::run_demo(which, g.tolerance);
    if (use_json(g)) {
        emit(bmfp::to_json(report));
    } else {
        std::cout << bmfp::render_demo(report, g.precision);
    }
    return report.ok() ? kExitHolds : kExitRefuted;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite b-metric space validation, contraction certification, and "
                 "fixed-point iteration"};
    app.require_subcommand(1);

    GlobalOptions global;
    std::string tolerance_text;
    app.add_option("--format", global.format, "output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    app.add_option("--precision", global.precision,
                   "significant digits in table output")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
    app.add_option("--tolerance", tolerance_text,
                   "relative comparison tolerance (overrides BMFP_TOLERANCE)");

    std::string space_path;
    std::string map_path;
    std::string suite_path;
    std::string coefficient_text;
    std::string theorem = "basic";
    std::string seed;
    std::string selector;
    std::size_t max_steps = 0;

    CLI::App* validate = app.add_subcommand("validate", "check the b-metric axioms of a space");
    validate->add_option("space", space_path, "space JSON file")->required();
    CLI::Option* coefficient_opt = validate->add_option(
        "--coefficient", coefficient_text, "check at this coefficient instead of the declared one");

    CLI::App* coefficient = app.add_subcommand(
        "coefficient", "compute the minimal admissible coefficient of a distance table");
    coefficient->add_option("space", space_path, "space JSON file")->required();

    CLI::App* certify =
        app.add_subcommand("certify", "certify a contraction condition over all ordered pairs");
    certify->add_option("--space", space_path, "space JSON file")->required();
    certify->add_option("--map", map_path, "self-map JSON file")->required();
    certify->add_option("--suite", suite_path, "function suite JSON file")->required();
    certify->add_option("--theorem", theorem, "which condition to certify")
        ->check(CLI::IsMember({"basic", "generalized"}))
        ->capture_default_str();

    CLI::App* iterate = app.add_subcommand("iterate", "run the fixed-point orbit from a seed");
    iterate->add_option("--space", space_path, "space JSON file")->required();
    iterate->add_option("--map", map_path, "self-map JSON file")->required();
    iterate->add_option("--seed", seed, "starting point label")->required();
    CLI::Option* max_steps_opt =
        iterate->add_option("--max-steps", max_steps, "defensive iteration cap");

    CLI::App* fixed_points =
        app.add_subcommand("fixed-points", "enumerate all fixed points by brute force");
    fixed_points->add_option("--space", space_path, "space JSON file")->required();
    fixed_points->add_option("--map", map_path, "self-map JSON file")->required();

    CLI::App* demo = app.add_subcommand("demo", "run an embedded reference case end to end");
    demo->add_option("case", selector, "A or B")->required();

    for (CLI::App* sub : {validate, coefficient, certify, iterate, fixed_points, demo}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitBadInput;
    }

    try {
        if (const char* env = std::getenv("BMFP_TOLERANCE"); env != nullptr) {
            global.tolerance.rel = parse_real_text(env, "BMFP_TOLERANCE");
        }
        if (!tolerance_text.empty()) {
            global.tolerance.rel = parse_real_text(tolerance_text, "--tolerance");
        }
        if (!(global.tolerance.rel > 0.0)) {
            throw std::invalid_argument("tolerance must be > 0");
        }

        if (validate->parsed()) {
            return cmd_validate(global, space_path,
                                *coefficient_opt ? std::optional(coefficient_text)
                                                 : std::nullopt);
        }
        if (coefficient->parsed()) {
            return cmd_coefficient(global, space_path);
        }
        if (certify->parsed()) {
            return cmd_certify(global, space_path, map_path, suite_path, theorem);
        }
        if (iterate->parsed()) {
            return cmd_iterate(global, space_path, map_path, seed,
                               *max_steps_opt ? std::optional(max_steps) : std::nullopt);
        }
        if (fixed_points->parsed()) {
            return cmd_fixed_points(global, space_path, map_path);
        }
        if (demo->parsed()) {
            return cmd_demo(global, selector);
        }
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
}

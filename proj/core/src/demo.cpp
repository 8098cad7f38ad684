#include "bmfp/demo.hpp"

#include <cmath>
#include <stdexcept>

namespace bmfp {

DemoCase demo_case_from_string(const std::string& name) {
    if (name == "A" || name == "a") return DemoCase::A;
    if (name == "B" || name == "b") return DemoCase::B;
    throw std::invalid_argument("unknown demo case: " + name + " (expected A or B)");
}

std::string demo_case_id(DemoCase which) {
    return which == DemoCase::A ? "A" : "B";
}

FiniteBMetricSpace demo_space(DemoCase which, const Tolerance& tol) {
    const std::vector<std::string> points{"1", "2", "3", "4"};
    if (which == DemoCase::A) {
        const DistanceMatrix d{{0, 3, 1, 4},  //
                               {3, 0, 1, 4},
                               {1, 1, 0, 4},
                               {4, 4, 4, 0}};
        return FiniteBMetricSpace(points, d, std::sqrt(3.0), tol);
    }
    const DistanceMatrix d{{0, 3, 1, 15},  //
                           {3, 0, 1, 4},
                           {1, 1, 0, 4},
                           {15, 4, 4, 0}};
    return FiniteBMetricSpace(points, d, 3.0, tol);
}

std::map<std::string, std::string> demo_map_table() {
    return {{"1", "3"}, {"2", "3"}, {"3", "3"}, {"4", "1"}};
}

FunctionSuite demo_suite(DemoCase which) {
    const double k = which == DemoCase::A ? std::sqrt(3.0) : 3.0;
    return FunctionSuite{ThetaFunction::affine_plus_one(), FcOperator::ratio(1.0),
                         SimulationFunction::scaled_ratio(k)};
}

bool DemoReport::ok() const {
    if (!validation.passed() || !membership.member) return false;
    if (!consequence.passed() || !fixed_points.unique) return false;
    if (which == DemoCase::A) {
        return basic.certified;
    }
    // Case B is built to fail the basic sweep and pass the generalized one.
    return !basic.certified && generalized && generalized->certified && continuity &&
           continuity->continuous;
}

DemoReport run_demo(DemoCase which, const Tolerance& tol) {
    DemoReport report;
    report.which = which;

    const FiniteBMetricSpace space = demo_space(which, tol);
    const SelfMap map = bind_self_map(space, demo_map_table());
    const FunctionSuite suite = demo_suite(which);

    report.validation = validate_axioms(space.distances(), space.coefficient(), tol);
    report.declared_coefficient = space.coefficient();
    report.minimal_coefficient = minimal_coefficient(space.distances(), tol);
    report.membership = scaled_ratio_membership(suite.j.k, space.coefficient(), tol);

    report.basic = certify_basic(space, map, suite, tol);
    if (which == DemoCase::B) {
        report.generalized = certify_generalized(space, map, suite, tol);
        report.continuity = check_b_continuity(space, map);
    }

    for (const auto& seed : space.points()) {
        report.trajectories.push_back(picard_iterate(space, map, seed));
    }
    report.fixed_points = enumerate_fixed_points(space, map);

    const ContractionCertificate& decisive =
        which == DemoCase::A ? report.basic : *report.generalized;
    report.consequence = check_theorem_consequence(space, map, decisive, tol);
    report.fixed_points.consistent =
        report.consequence.status != ConsequenceReport::Status::Fail;

    return report;
}

}  // namespace bmfp

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bmfp/certify.hpp"
#include "bmfp/picard.hpp"

namespace bmfp {

/// Two embedded 4-point reference cases on the points {1,2,3,4} with the map
/// 1,2,3 -> 3 and 4 -> 1.
///
/// Case A: d(1,2)=3, d(1,3)=d(2,3)=1, d(.,4)=4, coefficient sqrt(3), suite
///         with scaled_ratio(sqrt(3)). The basic condition certifies.
/// Case B: same table except d(1,4)=15, coefficient 3, suite with
///         scaled_ratio(3). The basic condition fails at (2,4) while the
///         generalized max-form condition certifies.
enum class DemoCase { A, B };

DemoCase demo_case_from_string(const std::string& name);  // "A" | "B"
std::string demo_case_id(DemoCase which);

FiniteBMetricSpace demo_space(DemoCase which, const Tolerance& tol = {});
std::map<std::string, std::string> demo_map_table();
FunctionSuite demo_suite(DemoCase which);

/// Full pipeline result for one case: axiom validation, minimal coefficient,
/// closed-form suite membership, certification (basic for A, basic then
/// generalized for B), orbits from every seed, the brute-force fixed-point
/// scan, and the consequence check against the certificate that is supposed
/// to certify.
struct DemoReport {
    DemoCase which = DemoCase::A;
    ValidationReport validation;
    double declared_coefficient = 1.0;
    double minimal_coefficient = 1.0;
    MembershipRuling membership;
    ContractionCertificate basic;
    std::optional<ContractionCertificate> generalized;  // case B only
    std::optional<ContinuityRuling> continuity;         // case B only
    std::vector<Trajectory> trajectories;               // one per seed, in point order
    FixedPointReport fixed_points;
    ConsequenceReport consequence;

    /// Whether every stage landed where the case is designed to land.
    bool ok() const;
};

DemoReport run_demo(DemoCase which, const Tolerance& tol = {});

}  // namespace bmfp

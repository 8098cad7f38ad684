#pragma once

#include <string>
#include <vector>

#include "bmfp/certify.hpp"
#include "bmfp/demo.hpp"
#include "bmfp/picard.hpp"
#include "bmfp/space.hpp"

namespace bmfp {

/// %g formatting at the given number of significant digits (default 6).
std::string format_number(double value, int precision = 6);

std::string render_validation(const ValidationReport& report,
                              const std::vector<std::string>* labels = nullptr,
                              int precision = 6);
std::string render_certificate(const ContractionCertificate& certificate, int precision = 6);
std::string render_trajectory(const Trajectory& trajectory, int precision = 6);
std::string render_fixed_points(const FixedPointReport& report);
std::string render_consequence(const ConsequenceReport& report);
std::string render_membership(const MembershipRuling& ruling);
std::string render_demo(const DemoReport& report, int precision = 6);

}  // namespace bmfp

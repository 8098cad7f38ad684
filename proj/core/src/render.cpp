#include "bmfp/render.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

namespace bmfp {

std::string format_number(double value, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
    return buf;
}

namespace {

std::string tuple_text(const std::vector<std::size_t>& where,
                       const std::vector<std::string>* labels) {
    std::string out = "(";
    for (std::size_t i = 0; i < where.size(); ++i) {
        if (i > 0) out += ", ";
        if (labels != nullptr && where[i] < labels->size()) {
            out += (*labels)[where[i]];
        } else {
            out += std::to_string(where[i]);
        }
    }
    out += ")";
    return out;
}

std::string pair_text(const PairRecord& r) {
    return "(" + r.x + ", " + r.y + ")";
}

}  // namespace

std::string render_validation(const ValidationReport& report,
                              const std::vector<std::string>* labels, int precision) {
    std::ostringstream out;
    if (report.passed()) {
        out << "axioms: pass\n";
        return out.str();
    }
    out << "axioms: fail (" << report.violations.size() << " violation(s))\n";
    for (const auto& v : report.violations) {
        out << "  axiom " << axiom_id(v.axiom) << " at " << tuple_text(v.where, labels) << ": ";
        switch (v.axiom) {
            case Axiom::Nonnegativity:
                out << "negative distance " << format_number(v.lhs, precision);
                break;
            case Axiom::Identity:
                if (v.where.size() == 2 && v.where[0] == v.where[1]) {
                    out << "diagonal entry " << format_number(v.lhs, precision) << " != 0";
                } else {
                    out << "distinct points at distance 0";
                }
                break;
            case Axiom::Symmetry:
                out << format_number(v.lhs, precision) << " != " << format_number(v.rhs, precision);
                break;
            case Axiom::Triangle:
                out << format_number(v.lhs, precision) << " > "
                    << format_number(v.rhs, precision);
                break;
        }
        out << "\n";
    }
    return out.str();
}

std::string render_certificate(const ContractionCertificate& certificate, int precision) {
    std::ostringstream out;
    out << "condition: " << condition_id(certificate.condition)
        << " | verdict: " << (certificate.certified ? "certified" : "refuted")
        << " | c = " << format_number(certificate.c, precision);
    if (certificate.min_margin) {
        out << " | min margin = " << format_number(*certificate.min_margin, precision);
    } else {
        out << " | no qualifying pairs";
    }
    out << "\n";

    if (!certificate.records.empty()) {
        const char* argument_head =
            certificate.condition == ConditionKind::Basic ? "b(x,y)" : "M_s(x,y)";
        out << std::left << std::setw(12) << "pair" << std::setw(12) << "b(Sx,Sy)"
            << std::setw(12) << argument_head << std::setw(14) << "j_value" << "margin\n";
        for (const auto& r : certificate.records) {
            out << std::left << std::setw(12) << pair_text(r) << std::setw(12)
                << format_number(r.image_distance, precision) << std::setw(12)
                << format_number(r.argument_distance, precision) << std::setw(14)
                << format_number(r.j_value, precision) << format_number(r.margin, precision)
                << "\n";
        }
    }
    if (!certificate.witnesses.empty()) {
        out << "witnesses:";
        for (const auto& w : certificate.witnesses) {
            out << " " << pair_text(w) << " margin " << format_number(w.margin, precision);
        }
        out << "\n";
    }
    return out.str();
}

std::string render_trajectory(const Trajectory& trajectory, int precision) {
    std::ostringstream out;
    out << "seed " << trajectory.seed << ": ";
    for (std::size_t i = 0; i < trajectory.visited.size(); ++i) {
        if (i > 0) out << " -> ";
        out << trajectory.visited[i];
    }
    if (!trajectory.step_distances.empty()) {
        out << " | step distances:";
        for (const double d : trajectory.step_distances) {
            out << " " << format_number(d, precision);
        }
    }
    if (const auto* fp = std::get_if<FixedPointOutcome>(&trajectory.outcome)) {
        out << " | fixed point " << fp->point << " at step " << fp->step;
    } else {
        const auto& cycle = std::get<CycleOutcome>(trajectory.outcome);
        out << " | cycle of period " << cycle.period << " entered at step " << cycle.entry;
    }
    out << "\n";
    return out.str();
}

std::string render_fixed_points(const FixedPointReport& report) {
    std::ostringstream out;
    out << "fixed points: {";
    for (std::size_t i = 0; i < report.fixed_points.size(); ++i) {
        if (i > 0) out << ", ";
        out << report.fixed_points[i];
    }
    out << "}" << (report.unique ? " (unique)" : " (not unique)");
    if (report.consistent) {
        out << (*report.consistent ? " consistent with certificate"
                                   : " INCONSISTENT with certificate");
    }
    out << "\n";
    return out.str();
}

std::string render_consequence(const ConsequenceReport& report) {
    std::ostringstream out;
    out << "consequence: ";
    switch (report.status) {
        case ConsequenceReport::Status::Pass: out << "pass"; break;
        case ConsequenceReport::Status::Fail: out << "FAIL"; break;
        case ConsequenceReport::Status::NotApplicable: out << "not applicable"; break;
    }
    out << " - " << report.detail << "\n";
    for (const auto& w : report.warnings) {
        out << "  warning: " << w << "\n";
    }
    return out.str();
}

std::string render_membership(const MembershipRuling& ruling) {
    std::ostringstream out;
    out << "membership: " << (ruling.member ? "member" : "NOT a member") << " - "
        << ruling.justification << "\n";
    return out.str();
}

std::string render_demo(const DemoReport& report, int precision) {
    std::ostringstream out;
    out << "=== demo " << demo_case_id(report.which) << " ===\n";
    out << render_validation(report.validation, nullptr, precision);
    out << "declared coefficient: " << format_number(report.declared_coefficient, precision)
        << "\n";
    out << "minimal coefficient: " << format_number(report.minimal_coefficient, precision)
        << "\n";
    out << render_membership(report.membership);
    out << "--- basic condition ---\n" << render_certificate(report.basic, precision);
    if (report.generalized) {
        out << "--- generalized condition ---\n"
            << render_certificate(*report.generalized, precision);
    }
    if (report.continuity) {
        out << "b-continuity: " << (report.continuity->continuous ? "holds" : "fails") << " - "
            << report.continuity->justification << "\n";
    }
    out << "--- orbits ---\n";
    for (const auto& t : report.trajectories) {
        out << render_trajectory(t, precision);
    }
    out << render_fixed_points(report.fixed_points);
    out << render_consequence(report.consequence);
    out << (report.ok() ? "demo outcome: as designed\n" : "demo outcome: UNEXPECTED\n");
    return out.str();
}

}  // namespace bmfp

#include "bmfp/picard.hpp"

#include <stdexcept>
#include <unordered_map>

namespace bmfp {

Trajectory picard_iterate(const FiniteBMetricSpace& space, const SelfMap& map,
                          const std::string& seed, std::optional<std::size_t> max_steps) {
    if (map.image.size() != space.size()) {
        throw std::invalid_argument("self-map is not bound to this space");
    }
    const std::size_t cap = max_steps.value_or(space.size() + 1);

    Trajectory traj;
    traj.seed = seed;

    std::unordered_map<std::size_t, std::size_t> first_seen;
    std::size_t current = space.index_of(seed);

    for (std::size_t step = 0; step <= cap; ++step) {
        auto [it, fresh] = first_seen.emplace(current, traj.visited.size());
        if (!fresh) {
            const std::size_t entry = it->second;
            const std::size_t period = traj.visited.size() - entry;
            if (period == 1) {
                traj.outcome = FixedPointOutcome{space.label(current), entry};
            } else {
                traj.outcome = CycleOutcome{period, entry};
            }
            // The repeat itself is not part of visited; drop its step distance.
            traj.step_distances.pop_back();
            return traj;
        }
        traj.visited.push_back(space.label(current));
        const std::size_t next = map(current);
        traj.step_distances.push_back(space.distance(current, next));
        current = next;
    }
    throw std::runtime_error("max_steps exhausted without a repeated point (cap " +
                             std::to_string(cap) + ")");
}

FixedPointReport enumerate_fixed_points(const FiniteBMetricSpace& space, const SelfMap& map) {
    if (map.image.size() != space.size()) {
        throw std::invalid_argument("self-map is not bound to this space");
    }
    FixedPointReport report;
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (map(i) == i) {
            report.fixed_points.push_back(space.label(i));
        }
    }
    report.unique = report.fixed_points.size() == 1;
    return report;
}

ContinuityRuling check_b_continuity(const FiniteBMetricSpace& space, const SelfMap& map) {
    if (map.image.size() != space.size()) {
        throw std::invalid_argument("self-map is not bound to this space");
    }
    ContinuityRuling ruling;
    ruling.continuous = true;
    ruling.justification =
        "on a finite space whose distinct points sit at positive distance, every convergent "
        "sequence is eventually constant, so any self-map preserves limits";
    return ruling;
}

ConsequenceReport check_theorem_consequence(const FiniteBMetricSpace& space, const SelfMap& map,
                                            const ContractionCertificate& certificate,
                                            const Tolerance& /*tol*/) {
    ConsequenceReport report;
    if (certificate.space_points != space.points()) {
        throw std::invalid_argument("certificate was produced for a different space");
    }
    // Authenticate the records against this instance: same labels can still
    // mean a different table or map.
    for (const auto& r : certificate.records) {
        const std::size_t x = space.index_of(r.x);
        const std::size_t y = space.index_of(r.y);
        const double image = space.distance(map(x), map(y));
        const double argument = certificate.condition == ConditionKind::Basic
                                    ? space.distance(x, y)
                                    : compute_Ms(space, map, x, y);
        if (image != r.image_distance || argument != r.argument_distance) {
            throw std::invalid_argument("certificate does not match this space and map");
        }
    }

    if (!certificate.certified) {
        report.status = ConsequenceReport::Status::NotApplicable;
        report.detail = "not applicable; certificate not certified";
        return report;
    }
    if (certificate.condition == ConditionKind::Generalized) {
        // The generalized condition additionally hypothesizes b-continuity.
        const ContinuityRuling continuity = check_b_continuity(space, map);
        if (!continuity.continuous) {
            report.status = ConsequenceReport::Status::NotApplicable;
            report.detail = "not applicable; map is not b-continuous";
            return report;
        }
    }

    const FixedPointReport fixed = enumerate_fixed_points(space, map);
    report.fixed_points = fixed.fixed_points;
    if (!fixed.unique) {
        report.status = ConsequenceReport::Status::Fail;
        report.detail = "certified map must have exactly one fixed point, found " +
                        std::to_string(fixed.fixed_points.size());
        return report;
    }
    const std::string& target = fixed.fixed_points.front();

    for (const auto& seed : space.points()) {
        const Trajectory traj = picard_iterate(space, map, seed);
        const auto* fp = std::get_if<FixedPointOutcome>(&traj.outcome);
        if (fp == nullptr || fp->point != target) {
            report.status = ConsequenceReport::Status::Fail;
            report.offending_seed = seed;
            report.detail = "orbit from seed " + seed + " does not settle at " + target;
            return report;
        }
        // Diagnostic only: a certified contraction shrinks consecutive step
        // distances strictly until they hit zero. A non-member suite can pass
        // the finite sweep yet break this; flag, do not fail.
        for (std::size_t i = 0; i + 1 < traj.step_distances.size(); ++i) {
            const double cur = traj.step_distances[i];
            const double nxt = traj.step_distances[i + 1];
            if (nxt > 0.0 && nxt >= cur) {
                report.warnings.push_back("step distances from seed " + seed +
                                          " are not strictly decreasing");
                break;
            }
        }
    }

    report.status = ConsequenceReport::Status::Pass;
    report.detail = "unique fixed point " + target + " reached from every seed";
    return report;
}

}  // namespace bmfp

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bmfp/certify.hpp"
#include "bmfp/space.hpp"

namespace bmfp {

struct FixedPointOutcome {
    std::string point;
    std::size_t step = 0;  // index in visited where the fixed point first appears
};

struct CycleOutcome {
    std::size_t period = 0;
    std::size_t entry = 0;  // index in visited where the cycle is entered
};

/// Orbit of repeated application of the map from a seed. visited holds the
/// points up to (not including) the first repeat, so its length never exceeds
/// the number of points; step_distances[n] = b(visited[n], visited[n+1]).
struct Trajectory {
    std::string seed;
    std::vector<std::string> visited;
    std::vector<double> step_distances;
    std::variant<FixedPointOutcome, CycleOutcome> outcome;

    bool is_fixed_point() const { return std::holds_alternative<FixedPointOutcome>(outcome); }
};

/// Iterates the map from seed until a point repeats, then classifies the
/// repeat: period 1 is a fixed point, anything longer a cycle. On an n-point
/// space a repeat always appears within n steps; max_steps (default n + 1) is
/// a defensive cap and throws std::runtime_error if exhausted.
Trajectory picard_iterate(const FiniteBMetricSpace& space, const SelfMap& map,
                          const std::string& seed,
                          std::optional<std::size_t> max_steps = std::nullopt);

/// Brute-force scan for map(p) = p over all points, in point order.
struct FixedPointReport {
    std::vector<std::string> fixed_points;
    bool unique = false;
    std::optional<bool> consistent;  // set by the consequence check, not here
};

FixedPointReport enumerate_fixed_points(const FiniteBMetricSpace& space, const SelfMap& map);

/// Sequential continuity of the map with respect to b-convergence. On a
/// finite space whose points are pairwise at positive distance every
/// convergent sequence is eventually constant, so every self-map qualifies;
/// kept as an explicit hypothesis gate for the generalized condition.
struct ContinuityRuling {
    bool continuous = true;
    std::string justification;
};

ContinuityRuling check_b_continuity(const FiniteBMetricSpace& space, const SelfMap& map);

/// Checks the conclusion a certified contraction guarantees: exactly one
/// fixed point, reached by the orbit of every seed. Not applicable when the
/// certificate is not certified. A failure always indicates a bug or an
/// invalid suite, never a counterexample to the theory.
struct ConsequenceReport {
    enum class Status { Pass, Fail, NotApplicable };

    Status status = Status::NotApplicable;
    std::string detail;
    std::vector<std::string> fixed_points;
    std::optional<std::string> offending_seed;
    std::vector<std::string> warnings;  // e.g. non-monotone step distances

    bool passed() const { return status == Status::Pass; }
};

ConsequenceReport check_theorem_consequence(const FiniteBMetricSpace& space, const SelfMap& map,
                                            const ContractionCertificate& certificate,
                                            const Tolerance& tol = {});

}  // namespace bmfp

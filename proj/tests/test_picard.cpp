#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "bmfp/demo.hpp"
#include "bmfp/picard.hpp"
#include "support.hpp"

using namespace bmfp;
using testsupport::Rng;

namespace {

FunctionSuite builtin_suite(double k) {
    return {ThetaFunction::affine_plus_one(), FcOperator::ratio(1.0),
            SimulationFunction::scaled_ratio(k)};
}

SelfMap identity_map(const FiniteBMetricSpace& space) {
    SelfMap map;
    for (std::size_t i = 0; i < space.size(); ++i) map.image.push_back(i);
    return map;
}

}  // namespace

TEST_CASE("orbits on case A") {
    const FiniteBMetricSpace space = demo_space(DemoCase::A);
    const SelfMap map = bind_self_map(space, demo_map_table());

    SUBCASE("seed 4 walks 4 -> 1 -> 3") {
        const Trajectory t = picard_iterate(space, map, "4");
        CHECK(t.visited == std::vector<std::string>{"4", "1", "3"});
        CHECK(t.step_distances == std::vector<double>{4.0, 1.0});
        const auto* fp = std::get_if<FixedPointOutcome>(&t.outcome);
        REQUIRE(fp != nullptr);
        CHECK(fp->point == "3");
        CHECK(fp->step == 2);
    }

    SUBCASE("seed 3 is already fixed") {
        const Trajectory t = picard_iterate(space, map, "3");
        CHECK(t.visited == std::vector<std::string>{"3"});
        CHECK(t.step_distances.empty());
        const auto* fp = std::get_if<FixedPointOutcome>(&t.outcome);
        REQUIRE(fp != nullptr);
        CHECK(fp->point == "3");
        CHECK(fp->step == 0);
    }

    SUBCASE("unknown seeds throw") {
        CHECK_THROWS_AS(picard_iterate(space, map, "9"), std::invalid_argument);
    }
}

TEST_CASE("a two-point swap is a cycle") {
    const FiniteBMetricSpace space({"p", "q"}, {{0, 2}, {2, 0}}, 1.0);
    const SelfMap swap = bind_self_map(space, {{"p", "q"}, {"q", "p"}});

    const Trajectory t = picard_iterate(space, swap, "p");
    CHECK(t.visited == std::vector<std::string>{"p", "q"});
    const auto* cycle = std::get_if<CycleOutcome>(&t.outcome);
    REQUIRE(cycle != nullptr);
    CHECK(cycle->period == 2);
    CHECK(cycle->entry == 0);
    CHECK_FALSE(t.is_fixed_point());
}

TEST_CASE("an exhausted step cap is reported") {
    const FiniteBMetricSpace space({"a", "b", "c"}, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}, 1.0);
    const SelfMap chain = bind_self_map(space, {{"a", "b"}, {"b", "c"}, {"c", "c"}});
    CHECK_THROWS_AS(picard_iterate(space, chain, "a", 1), std::runtime_error);
    CHECK_NOTHROW(picard_iterate(space, chain, "a"));
}

TEST_CASE("fixed point enumeration") {
    const FiniteBMetricSpace a = demo_space(DemoCase::A);
    const FiniteBMetricSpace b = demo_space(DemoCase::B);
    const SelfMap map_a = bind_self_map(a, demo_map_table());
    const SelfMap map_b = bind_self_map(b, demo_map_table());

    CHECK(enumerate_fixed_points(a, map_a).fixed_points == std::vector<std::string>{"3"});
    CHECK(enumerate_fixed_points(a, map_a).unique);
    CHECK(enumerate_fixed_points(b, map_b).fixed_points == std::vector<std::string>{"3"});

    const FixedPointReport id = enumerate_fixed_points(a, identity_map(a));
    CHECK(id.fixed_points == a.points());
    CHECK_FALSE(id.unique);
}

TEST_CASE("b-continuity always holds on finite separated spaces") {
    const FiniteBMetricSpace b = demo_space(DemoCase::B);
    CHECK(check_b_continuity(b, bind_self_map(b, demo_map_table())).continuous);
    CHECK(check_b_continuity(b, identity_map(b)).continuous);
    CHECK_FALSE(check_b_continuity(b, identity_map(b)).justification.empty());
}

TEST_CASE("consequence check on the reference cases") {
    const FiniteBMetricSpace a = demo_space(DemoCase::A);
    const FiniteBMetricSpace b = demo_space(DemoCase::B);
    const SelfMap map_a = bind_self_map(a, demo_map_table());
    const SelfMap map_b = bind_self_map(b, demo_map_table());

    SUBCASE("case A, certified basic certificate") {
        const ContractionCertificate cert = certify_basic(a, map_a, demo_suite(DemoCase::A));
        const ConsequenceReport report = check_theorem_consequence(a, map_a, cert);
        CHECK(report.status == ConsequenceReport::Status::Pass);
        CHECK(report.fixed_points == std::vector<std::string>{"3"});
        CHECK(report.warnings.empty());
    }

    SUBCASE("case B, certified generalized certificate") {
        const ContractionCertificate cert =
            certify_generalized(b, map_b, demo_suite(DemoCase::B));
        const ConsequenceReport report = check_theorem_consequence(b, map_b, cert);
        CHECK(report.status == ConsequenceReport::Status::Pass);
    }

    SUBCASE("case B, refuted basic certificate is not applicable") {
        const ContractionCertificate cert = certify_basic(b, map_b, demo_suite(DemoCase::B));
        REQUIRE_FALSE(cert.certified);
        const ConsequenceReport report = check_theorem_consequence(b, map_b, cert);
        CHECK(report.status == ConsequenceReport::Status::NotApplicable);
        CHECK(report.detail.find("not applicable") != std::string::npos);
    }

    SUBCASE("a certificate from another instance is rejected") {
        const ContractionCertificate cert = certify_basic(a, map_a, demo_suite(DemoCase::A));
        CHECK_THROWS_AS(check_theorem_consequence(b, map_b, cert), std::invalid_argument);
    }
}

TEST_CASE("pigeonhole: every orbit resolves within the point count") {
    Rng rng(43);
    for (int i = 0; i < 100; ++i) {
        const FiniteBMetricSpace space = testsupport::random_space(rng);
        const SelfMap map = testsupport::random_map(rng, space);
        for (const auto& seed : space.points()) {
            const Trajectory t = picard_iterate(space, map, seed);
            CHECK(t.visited.size() <= space.size());
            CHECK(t.step_distances.size() + 1 == t.visited.size());
        }
    }
}

TEST_CASE("certified instances shrink step distances strictly until zero") {
    Rng rng(47);
    int exercised = 0;
    for (int i = 0; i < 300; ++i) {
        const FiniteBMetricSpace space = testsupport::random_space(rng);
        const SelfMap map = testsupport::random_map(rng, space);
        const double k = space.coefficient();
        if (!(k > 1.0)) continue;
        const ContractionCertificate cert = certify_basic(space, map, builtin_suite(k));
        if (!cert.certified) continue;
        ++exercised;
        for (const auto& seed : space.points()) {
            const Trajectory t = picard_iterate(space, map, seed);
            for (std::size_t n = 0; n + 1 < t.step_distances.size(); ++n) {
                CHECK(t.step_distances[n + 1] < t.step_distances[n]);
            }
        }
    }
    CHECK(exercised > 0);
}

TEST_CASE("enumeration is equivariant under relabeling") {
    Rng rng(53);
    for (int i = 0; i < 50; ++i) {
        const FiniteBMetricSpace space = testsupport::random_space(rng);
        const SelfMap map = testsupport::random_map(rng, space);
        const FixedPointReport before = enumerate_fixed_points(space, map);

        // Rotate labels by one position.
        const std::size_t n = space.size();
        std::vector<std::string> labels(n);
        DistanceMatrix d(n, std::vector<double>(n, 0.0));
        SelfMap rotated;
        rotated.image.assign(n, 0);
        for (std::size_t x = 0; x < n; ++x) {
            labels[(x + 1) % n] = space.label(x);
            rotated.image[(x + 1) % n] = (map(x) + 1) % n;
            for (std::size_t y = 0; y < n; ++y) {
                d[(x + 1) % n][(y + 1) % n] = space.distance(x, y);
            }
        }
        const FiniteBMetricSpace rotated_space(labels, d, space.coefficient());
        const FixedPointReport after = enumerate_fixed_points(rotated_space, rotated);

        // Same label set, same uniqueness.
        CHECK(after.unique == before.unique);
        std::vector<std::string> sorted_before = before.fixed_points;
        std::vector<std::string> sorted_after = after.fixed_points;
        std::sort(sorted_before.begin(), sorted_before.end());
        std::sort(sorted_after.begin(), sorted_after.end());
        CHECK(sorted_after == sorted_before);
    }
}

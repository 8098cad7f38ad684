#include "bmfp/certify.hpp"

#include <algorithm>
#include <stdexcept>

namespace bmfp {

std::string condition_id(ConditionKind c) {
    return c == ConditionKind::Basic ? "basic" : "generalized";
}

double compute_Ms(const FiniteBMetricSpace& space, const SelfMap& map, std::size_t x,
                  std::size_t y) {
    const std::size_t sx = map(x);
    const std::size_t sy = map(y);
    const double s = space.coefficient();
    const double cross = (space.distance(sx, y) + space.distance(x, sy)) / (2.0 * s);
    return std::max({space.distance(x, y), space.distance(x, sx), space.distance(y, sy), cross});
}

double compute_Ms(const FiniteBMetricSpace& space, const SelfMap& map, const std::string& x,
                  const std::string& y) {
    return compute_Ms(space, map, space.index_of(x), space.index_of(y));
}

namespace {

ContractionCertificate sweep(ConditionKind condition, const FiniteBMetricSpace& space,
                             const SelfMap& map, const FunctionSuite& suite,
                             const Tolerance& tol) {
    if (map.image.size() != space.size()) {
        throw std::invalid_argument("self-map is not bound to this space");
    }

    ContractionCertificate cert;
    cert.condition = condition;
    cert.c = suite.fc.c;
    cert.space_points = space.points();

    const std::size_t n = space.size();
    const double slack = tol.slack(std::max(1.0, std::fabs(suite.fc.c)));

    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            const double image = space.distance(map(x), map(y));
            if (!(image > 0.0)) continue;  // condition is vacuous at b(Sx,Sy) = 0

            const double argument = condition == ConditionKind::Basic
                                        ? space.distance(x, y)
                                        : compute_Ms(space, map, x, y);
            if (!(argument > 0.0)) {
                // x = y forces Sx = Sy, so a qualifying pair always has a
                // positive argument; reaching this means corrupted inputs.
                throw std::logic_error("internal inconsistency: positive image distance with "
                                       "zero argument distance at (" +
                                       space.label(x) + ", " + space.label(y) + ")");
            }

            PairRecord rec;
            rec.x = space.label(x);
            rec.y = space.label(y);
            rec.image_distance = image;
            rec.argument_distance = argument;
            rec.j_value = suite.j(suite.theta(image), suite.theta(argument));
            rec.margin = rec.j_value - suite.fc.c;
            cert.records.push_back(rec);

            if (rec.margin < -slack) {
                cert.witnesses.push_back(rec);
            }
            cert.min_margin = cert.min_margin ? std::min(*cert.min_margin, rec.margin)
                                              : rec.margin;
        }
    }

    cert.certified = cert.witnesses.empty();
    return cert;
}

}  // namespace

ContractionCertificate certify_basic(const FiniteBMetricSpace& space, const SelfMap& map,
                                     const FunctionSuite& suite, const Tolerance& tol) {
    return sweep(ConditionKind::Basic, space, map, suite, tol);
}

ContractionCertificate certify_generalized(const FiniteBMetricSpace& space, const SelfMap& map,
                                           const FunctionSuite& suite, const Tolerance& tol) {
    return sweep(ConditionKind::Generalized, space, map, suite, tol);
}

}  // namespace bmfp

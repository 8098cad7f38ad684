#include "bmfp/space.hpp"

#include <algorithm>
#include <utility>

namespace bmfp {

std::string axiom_id(Axiom a) {
    switch (a) {
        case Axiom::Nonnegativity: return "nonneg";
        case Axiom::Identity: return "i";
        case Axiom::Symmetry: return "ii";
        case Axiom::Triangle: return "iii";
    }
    return "?";
}

namespace {

void require_square(const DistanceMatrix& d) {
    const std::size_t n = d.size();
    for (const auto& row : d) {
        if (row.size() != n) {
            throw std::invalid_argument("distance matrix is not square");
        }
    }
}

// Nonnegativity, identity and symmetry, reported in (i,j) order. Symmetry is
// reported once per unordered pair, at i < j.
void check_entry_axioms(const DistanceMatrix& d, ValidationReport& report) {
    const std::size_t n = d.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double v = d[i][j];
            if (v < 0.0) {
                report.violations.push_back({Axiom::Nonnegativity, {i, j}, v, 0.0});
            }
            if (i == j && v != 0.0) {
                report.violations.push_back({Axiom::Identity, {i, j}, v, 0.0});
            }
            if (i != j && v == 0.0) {
                // Distinct points must be at positive distance.
                report.violations.push_back({Axiom::Identity, {i, j}, v, 0.0});
            }
            if (i < j && d[i][j] != d[j][i]) {
                report.violations.push_back({Axiom::Symmetry, {i, j}, d[i][j], d[j][i]});
            }
        }
    }
}

}  // namespace

ValidationReport validate_axioms(const DistanceMatrix& d, double coefficient,
                                 const Tolerance& tol) {
    require_square(d);
    const std::size_t n = d.size();
    ValidationReport report;
    check_entry_axioms(d, report);

    // Triangle axiom over all ordered triples.
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t z = 0; z < n; ++z) {
                const double lhs = d[x][z];
                const double rhs = coefficient * (d[x][y] + d[y][z]);
                if (!approx_leq(lhs, rhs, tol)) {
                    report.violations.push_back({Axiom::Triangle, {x, y, z}, lhs, rhs});
                }
            }
        }
    }

    // Deterministic witness order: lexicographic by index tuple, entry
    // violations before a triangle violation at the same prefix.
    std::stable_sort(report.violations.begin(), report.violations.end(),
                     [](const AxiomViolation& a, const AxiomViolation& b) {
                         return a.where < b.where;
                     });
    return report;
}

double minimal_coefficient(const DistanceMatrix& d, const Tolerance&) {
    require_square(d);
    // Triangle ratios presuppose a symmetric, point-separating table.
    ValidationReport base;
    check_entry_axioms(d, base);
    if (!base.passed()) {
        throw std::invalid_argument(
            "minimal_coefficient requires axioms (i) and (ii) to hold; axiom " +
            axiom_id(base.violations.front().axiom) + " fails");
    }

    const std::size_t n = d.size();
    double best = 1.0;
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            for (std::size_t z = 0; z < n; ++z) {
                if (x == z || y == x || y == z) continue;
                const double num = d[x][z];
                const double den = d[x][y] + d[y][z];
                if (den == 0.0) {
                    if (num > 0.0) {
                        throw std::runtime_error("no finite coefficient: zero detour through " +
                                                 std::to_string(y));
                    }
                    continue;
                }
                best = std::max(best, num / den);
            }
        }
    }
    return best;
}

SpaceBuildError::SpaceBuildError(std::string message, ValidationReport report)
    : std::runtime_error(std::move(message)), report_(std::move(report)) {}

FiniteBMetricSpace::FiniteBMetricSpace(std::vector<std::string> points, DistanceMatrix distances,
                                       double coefficient, const Tolerance& tol)
    : points_(std::move(points)), distances_(std::move(distances)), coefficient_(coefficient) {
    if (points_.empty()) {
        throw std::invalid_argument("a space needs at least one point");
    }
    require_square(distances_);
    if (distances_.size() != points_.size()) {
        throw std::invalid_argument("distance matrix side does not match the number of points");
    }
    if (!(coefficient_ >= 1.0)) {
        throw std::invalid_argument("coefficient must be >= 1");
    }
    for (std::size_t i = 0; i < points_.size(); ++i) {
        auto [it, inserted] = index_.emplace(points_[i], i);
        if (!inserted) {
            throw std::invalid_argument("duplicate point label: " + points_[i]);
        }
    }

    ValidationReport report = validate_axioms(distances_, coefficient_, tol);
    if (!report.passed()) {
        throw SpaceBuildError("distance table violates the b-metric axioms (" +
                                  std::to_string(report.violations.size()) + " violation(s))",
                              std::move(report));
    }
}

std::size_t FiniteBMetricSpace::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) {
        throw std::invalid_argument("unknown point label: " + label);
    }
    return it->second;
}

bool FiniteBMetricSpace::has_point(const std::string& label) const {
    return index_.contains(label);
}

double FiniteBMetricSpace::distance(const std::string& x, const std::string& y) const {
    return distances_[index_of(x)][index_of(y)];
}

SelfMap bind_self_map(const FiniteBMetricSpace& space,
                      const std::map<std::string, std::string>& table) {
    SelfMap map;
    map.image.reserve(space.size());
    for (const auto& label : space.points()) {
        auto it = table.find(label);
        if (it == table.end()) {
            throw std::invalid_argument("map table has no image for point " + label);
        }
        map.image.push_back(space.index_of(it->second));
    }
    for (const auto& [from, to] : table) {
        if (!space.has_point(from)) {
            throw std::invalid_argument("map table mentions unknown point " + from);
        }
    }
    return map;
}

}  // namespace bmfp

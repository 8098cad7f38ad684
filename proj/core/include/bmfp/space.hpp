#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "bmfp/common.hpp"

namespace bmfp {

/// Square distance table, row-major: distances[i][j] = b(p_i, p_j).
using DistanceMatrix = std::vector<std::vector<double>>;

/// The b-metric axioms, plus the nonnegativity requirement on the codomain.
///   nonneg : b(x,y) >= 0
///   i      : b(x,y) = 0 iff x = y            (checked exactly, no tolerance)
///   ii     : b(x,y) = b(y,x)
///   iii    : b(x,z) <= s * (b(x,y) + b(y,z)) (checked with tolerance)
enum class Axiom { Nonnegativity, Identity, Symmetry, Triangle };

std::string axiom_id(Axiom a);

struct AxiomViolation {
    Axiom axiom;
    std::vector<std::size_t> where;  // (i,j) for nonneg/i/ii, (x,y,z) for iii
    double lhs = 0.0;
    double rhs = 0.0;
};

struct ValidationReport {
    std::vector<AxiomViolation> violations;

    bool passed() const { return violations.empty(); }
};

/// Exhaustively checks every index tuple against every axiom and lists all
/// violations in lexicographic order of the index tuple. Never throws for
/// axiom failures; throws std::invalid_argument only if the matrix is not
/// square.
ValidationReport validate_axioms(const DistanceMatrix& distances, double coefficient,
                                 const Tolerance& tol = {});

/// Least admissible coefficient:
///   max(1, max over ordered triples (x,y,z) with x != z, y not in {x,z}
///          of d(x,z) / (d(x,y) + d(y,z))).
/// Precondition: axioms nonneg, (i) and (ii) hold (throws std::invalid_argument
/// otherwise). A zero denominator with positive numerator cannot occur then;
/// it is still reported via std::runtime_error as "no finite coefficient".
double minimal_coefficient(const DistanceMatrix& distances, const Tolerance& tol = {});

/// Construction failure that carries the full per-axiom violation report.
class SpaceBuildError : public std::runtime_error {
public:
    SpaceBuildError(std::string message, ValidationReport report);

    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

/// A finite point set with a validated b-metric table and its declared
/// coefficient. Immutable after construction; all accessors are const.
class FiniteBMetricSpace {
public:
    /// Validates shape (nonempty unique labels, square matrix, s >= 1;
    /// std::invalid_argument) and the axioms (SpaceBuildError with report).
    FiniteBMetricSpace(std::vector<std::string> points, DistanceMatrix distances,
                       double coefficient, const Tolerance& tol = {});

    std::size_t size() const { return points_.size(); }
    const std::vector<std::string>& points() const { return points_; }
    const DistanceMatrix& distances() const { return distances_; }
    double coefficient() const { return coefficient_; }

    const std::string& label(std::size_t i) const { return points_.at(i); }
    /// Throws std::invalid_argument for labels not in the space.
    std::size_t index_of(const std::string& label) const;
    bool has_point(const std::string& label) const;

    double distance(std::size_t i, std::size_t j) const { return distances_[i][j]; }
    double distance(const std::string& x, const std::string& y) const;

private:
    std::vector<std::string> points_;
    DistanceMatrix distances_;
    double coefficient_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// A total self-map of a space, stored as image indices into space.points().
struct SelfMap {
    std::vector<std::size_t> image;

    std::size_t operator()(std::size_t i) const { return image.at(i); }
};

/// Binds a label -> label table to a space, checking totality (every point has
/// exactly one image) and that every image is a point of the space.
/// Throws std::invalid_argument on any mismatch.
SelfMap bind_self_map(const FiniteBMetricSpace& space,
                      const std::map<std::string, std::string>& table);

}  // namespace bmfp

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bmfp/functions.hpp"
#include "bmfp/space.hpp"

namespace bmfp {

/// Which contraction inequality a certificate was produced for: the plain
/// point-distance form, or the generalized form whose right-hand side is the
/// four-term maximum M_s.
enum class ConditionKind { Basic, Generalized };

std::string condition_id(ConditionKind c);  // "basic" | "generalized"

/// One qualifying ordered pair (image distance positive) with the evaluated
/// inequality pieces. margin = j_value - c; the pair is a counterexample when
/// the margin is negative beyond tolerance.
struct PairRecord {
    std::string x;
    std::string y;
    double image_distance = 0.0;     // b(Sx, Sy)
    double argument_distance = 0.0;  // b(x, y), or M_s(x, y) for the generalized form
    double j_value = 0.0;            // J(theta(image), theta(argument))
    double margin = 0.0;
};

/// Exhaustive per-pair evaluation of a contraction condition on a finite
/// space: every qualifying ordered pair gets a record, pairs whose margin is
/// negative beyond tolerance land in witnesses, and the verdict is certified
/// exactly when witnesses is empty.
struct ContractionCertificate {
    ConditionKind condition = ConditionKind::Basic;
    bool certified = false;
    double c = 1.0;
    std::vector<PairRecord> records;    // sorted by (x, y) in point order
    std::vector<PairRecord> witnesses;  // records with margin < -slack
    std::optional<double> min_margin;   // empty when no pair qualifies
    std::vector<std::string> space_points;  // identifies the space certified against
};

/// The four-term maximum of the generalized condition:
///   max{ b(x,y), b(x,Sx), b(y,Sy), (b(Sx,y) + b(x,Sy)) / (2s) }
/// with s the space's declared coefficient.
double compute_Ms(const FiniteBMetricSpace& space, const SelfMap& map, std::size_t x,
                  std::size_t y);
double compute_Ms(const FiniteBMetricSpace& space, const SelfMap& map, const std::string& x,
                  const std::string& y);

/// Sweeps J(theta(b(Sx,Sy)), theta(b(x,y))) >= c over every ordered pair with
/// b(Sx,Sy) > 0. Pairs with zero image distance are vacuous and skipped.
ContractionCertificate certify_basic(const FiniteBMetricSpace& space, const SelfMap& map,
                                     const FunctionSuite& suite, const Tolerance& tol = {});

/// Same sweep with the argument distance replaced by M_s(x, y).
ContractionCertificate certify_generalized(const FiniteBMetricSpace& space, const SelfMap& map,
                                           const FunctionSuite& suite, const Tolerance& tol = {});

}  // namespace bmfp

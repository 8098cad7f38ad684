#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bmfp/common.hpp"

namespace bmfp {

// ---------------------------------------------------------------------------
// Built-in function families
// ---------------------------------------------------------------------------

/// Gauge functions (0,inf) -> (1,inf): strictly increasing, continuous, and
/// tending to 1 at 0+.
enum class ThetaKind { AffinePlusOne, Exponential };

struct ThetaFunction {
    ThetaKind kind = ThetaKind::AffinePlusOne;

    static ThetaFunction affine_plus_one() { return {ThetaKind::AffinePlusOne}; }
    static ThetaFunction exponential() { return {ThetaKind::Exponential}; }

    /// Throws std::domain_error for x <= 0.
    double operator()(double x) const;
    std::string name() const;
};

inline double theta_eval(const ThetaFunction& theta, double x) { return theta(x); }

/// Comparison operators on [1,inf)^2 with threshold constant c >= 1.
/// The built-in member is the ratio x/y, whose canonical constant is c = 1.
enum class FcKind { Ratio };

struct FcOperator {
    FcKind kind = FcKind::Ratio;
    double c = 1.0;

    static FcOperator ratio(double c = 1.0) { return {FcKind::Ratio, c}; }

    /// Throws std::domain_error for arguments below 1.
    double operator()(double x, double y) const;
    std::string name() const;
};

inline double fc_eval(const FcOperator& op, double x, double y) { return op(x, y); }

/// Simulation functions on [1,inf)^2. The built-in family is
/// scaled_ratio(k): (x,y) -> y / (k*x).
enum class SimKind { ScaledRatio };

struct SimulationFunction {
    SimKind kind = SimKind::ScaledRatio;
    double k = 2.0;

    static SimulationFunction scaled_ratio(double k) { return {SimKind::ScaledRatio, k}; }

    /// Throws std::domain_error for arguments below 1.
    double operator()(double x, double y) const;
    std::string name() const;
};

inline double j_eval(const SimulationFunction& j, double x, double y) { return j(x, y); }

/// The bundle a contraction certification runs with.
struct FunctionSuite {
    ThetaFunction theta;
    FcOperator fc;
    SimulationFunction j;
};

// ---------------------------------------------------------------------------
// Sampled property checks (falsifiers)
//
// Universal quantifiers over functions and sequences are not decidable, so
// every check below has falsifier semantics: "pass" means no violation was
// found on the supplied samples, "fail" carries a concrete witness. Proved
// membership for the built-in families is the job of the closed-form rules
// (scaled_ratio_membership), not of these sweeps.
// ---------------------------------------------------------------------------

struct CheckWitness {
    std::string property;     // e.g. "theta.increasing", "fc.ii", "j.i"
    std::vector<double> at;   // sample point(s) the violation occurred at
    double lhs = 0.0;
    double rhs = 0.0;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckWitness> witnesses;

    bool passed() const { return witnesses.empty(); }
};

/// 64 log-spaced samples on (1, 1e3], open at 1.
std::vector<double> default_axis_grid();

/// The ladder {2^-m : m = 1..40} joined with {1, 2, ..., 10}, ascending.
std::vector<double> default_theta_grid();

using RealFn = std::function<double(double)>;
using RealFn2 = std::function<double(double, double)>;

/// Gauge membership sweep: strict monotonicity on adjacent grid samples,
/// values > 1, the limit-1-at-0 ladder (always x = 2^-m, m = 1..40,
/// independent of the grid), and a two-level refinement scan for jumps.
/// Grid must be ascending with at least 16 samples.
CheckReport check_theta_membership(const RealFn& theta, std::span<const double> grid,
                                   const Tolerance& tol = {});
CheckReport check_theta_membership(const ThetaFunction& theta, std::span<const double> grid,
                                   const Tolerance& tol = {});
CheckReport check_theta_membership(const ThetaFunction& theta, const Tolerance& tol = {});

/// Comparison-operator sweep over axis_grid x axis_grid:
///   (ii)  F(x,y) <= x
///   (iii) F(x,y) = x forces x = 1 or y = 1
///   (iv)  F(x,y) > c forces x > y, and F(x,x) <= c
/// plus a refinement scan for jumps along every grid row and column.
CheckReport check_fc_properties(const RealFn2& fc, double c, std::span<const double> axis_grid,
                                const Tolerance& tol = {});
CheckReport check_fc_properties(const FcOperator& fc, std::span<const double> axis_grid,
                                const Tolerance& tol = {});
CheckReport check_fc_properties(const FcOperator& fc, const Tolerance& tol = {});

/// Strict domination sweep: J(x,y) < F(y,x) at every grid pair. All grid
/// values must be strictly above 1.
CheckReport check_j_property_i(const RealFn2& j, const RealFn2& fc,
                               std::span<const double> axis_grid, const Tolerance& tol = {});
CheckReport check_j_property_i(const SimulationFunction& j, const FcOperator& fc,
                               std::span<const double> axis_grid, const Tolerance& tol = {});
CheckReport check_j_property_i(const SimulationFunction& j, const FcOperator& fc,
                               const Tolerance& tol = {});

// ---------------------------------------------------------------------------
// Sequence-pair probes for the limsup condition
// ---------------------------------------------------------------------------

/// Two positive sequences with a designated tail window over which liminf and
/// limsup are estimated as window min and max. tail_window = 0 means "last
/// half of the sequence".
struct SequencePairProbe {
    std::vector<double> a;
    std::vector<double> b;
    std::size_t tail_window = 0;
    double s = 1.0;  // coefficient the interleaved bound chains are tested at
};

struct ProbeReport {
    enum class Status { Pass, Fail, HypothesisNotMet };

    Status status = Status::HypothesisNotMet;
    double tail_limsup = 0.0;  // of J(theta(a_n), theta(b_n)), when hypothesis holds
    std::string detail;

    bool passed() const { return status == Status::Pass; }
};

/// Checks one probe against the limsup condition: if the tail estimates
/// satisfy both interleaved chains
///     0 < inf a <= s * sup b <= s^2 * inf a < inf
///     0 < inf b <= s * sup a <= s^2 * inf b < inf
/// then sup over the tail of J(theta(a_n), theta(b_n)) must be strictly
/// below c. Probes whose tails miss the chains are vacuous
/// (HypothesisNotMet), not failures.
ProbeReport check_j_property_ii(const SimulationFunction& j, const ThetaFunction& theta,
                                const SequencePairProbe& probe, double c,
                                const Tolerance& tol = {});

// ---------------------------------------------------------------------------
// Closed-form membership for the built-in simulation family
// ---------------------------------------------------------------------------

struct MembershipRuling {
    bool member = false;
    std::string justification;
};

/// Decides whether scaled_ratio(k), paired with the affine gauge x+1 and the
/// ratio comparison, satisfies the limsup condition for every admissible
/// sequence pair at coefficient s. True iff k >= s (with tolerance) and
/// k > 1: the chains give sup b <= s * inf a, so the tail ratio is bounded by
/// (s*L + 1) / (k*L + k) < 1 with L = inf a.
MembershipRuling scaled_ratio_membership(double k, double s, const Tolerance& tol = {});

/// Optional diagnostic: the power-law rate of theta(x) - 1 at 0+, returned as
/// (exponent, limit). Both built-ins are first-order: (1, 1). Not required by
/// any certification path.
std::optional<std::pair<double, double>> theta_power_limit(const ThetaFunction& theta);

}  // namespace bmfp

#include "bmfp/functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>

namespace bmfp {

double ThetaFunction::operator()(double x) const {
    if (!(x > 0.0)) {
        throw std::domain_error("theta is defined on (0, inf)");
    }
    switch (kind) {
        case ThetaKind::AffinePlusOne: return x + 1.0;
        case ThetaKind::Exponential: return std::exp(x);
    }
    throw std::logic_error("unreachable theta kind");
}

std::string ThetaFunction::name() const {
    switch (kind) {
        case ThetaKind::AffinePlusOne: return "affine_plus_one";
        case ThetaKind::Exponential: return "exponential";
    }
    return "?";
}

double FcOperator::operator()(double x, double y) const {
    if (!(x >= 1.0) || !(y >= 1.0)) {
        throw std::domain_error("fc operators are defined on [1, inf)^2");
    }
    switch (kind) {
        case FcKind::Ratio: return x / y;
    }
    throw std::logic_error("unreachable fc kind");
}

std::string FcOperator::name() const {
    switch (kind) {
        case FcKind::Ratio: return "ratio";
    }
    return "?";
}

double SimulationFunction::operator()(double x, double y) const {
    if (!(x >= 1.0) || !(y >= 1.0)) {
        throw std::domain_error("simulation functions are defined on [1, inf)^2");
    }
    if (!(k > 0.0)) {
        throw std::domain_error("scaled_ratio needs k > 0");
    }
    switch (kind) {
        case SimKind::ScaledRatio: return y / (k * x);
    }
    throw std::logic_error("unreachable simulation kind");
}

std::string SimulationFunction::name() const {
    switch (kind) {
        case SimKind::ScaledRatio: return "scaled_ratio";
    }
    return "?";
}

std::vector<double> default_axis_grid() {
    std::vector<double> grid;
    grid.reserve(64);
    for (int i = 1; i <= 64; ++i) {
        grid.push_back(std::pow(10.0, 3.0 * i / 64.0));
    }
    return grid;
}

std::vector<double> default_theta_grid() {
    std::vector<double> grid;
    grid.reserve(50);
    for (int m = 40; m >= 1; --m) {
        grid.push_back(std::ldexp(1.0, -m));
    }
    for (int i = 1; i <= 10; ++i) {
        grid.push_back(static_cast<double>(i));
    }
    return grid;
}

namespace {

constexpr int kRefine = 4;             // subintervals per refinement level
constexpr int kLadderTop = 40;         // ladder 2^-1 .. 2^-40
constexpr double kLimitWindow = 1e-6;  // how close to 1 the ladder must land

void require_grid(std::span<const double> grid, std::size_t min_samples) {
    if (grid.size() < min_samples) {
        throw std::invalid_argument("grid needs at least " + std::to_string(min_samples) +
                                    " samples");
    }
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        if (!(grid[i] < grid[i + 1])) {
            throw std::invalid_argument("grid must be strictly ascending");
        }
    }
}

// Largest jump between adjacent samples of f on [lo, hi] split into kRefine
// parts, together with the bracketing subinterval.
std::tuple<double, double, double> max_subjump(const RealFn& f, double lo, double hi) {
    double worst = 0.0;
    double wlo = lo;
    double whi = hi;
    double prev_x = lo;
    double prev_f = f(lo);
    for (int step = 1; step <= kRefine; ++step) {
        const double x = lo + (hi - lo) * step / kRefine;
        const double fx = f(x);
        const double jump = std::fabs(fx - prev_f);
        if (jump > worst) {
            worst = jump;
            wlo = prev_x;
            whi = x;
        }
        prev_x = x;
        prev_f = fx;
    }
    return {worst, wlo, whi};
}

// A jump between adjacent grid samples that refuses to shrink under two
// successive 4x refinements brackets a discontinuity; a continuous function
// drops the bracketed jump by roughly the refinement factor each time.
void scan_for_jumps(const RealFn& f, std::span<const double> xs, const std::string& property,
                    const Tolerance& tol, CheckReport& report) {
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const double a = xs[i];
        const double b = xs[i + 1];
        const double fa = f(a);
        const double fb = f(b);
        const double j0 = std::fabs(fb - fa);
        const double floor = 32.0 * tol.slack(std::max(std::fabs(fa), std::fabs(fb)));
        if (j0 <= floor) continue;

        auto [j1, lo1, hi1] = max_subjump(f, a, b);
        if (j1 <= 0.6 * j0) continue;
        auto [j2, lo2, hi2] = max_subjump(f, lo1, hi1);
        if (j2 <= 0.6 * j1) continue;

        report.witnesses.push_back({property,
                                    {lo2, hi2},
                                    j2,
                                    floor,
                                    "jump persists under refinement"});
    }
}

}  // namespace

CheckReport check_theta_membership(const RealFn& theta, std::span<const double> grid,
                                   const Tolerance& tol) {
    require_grid(grid, 16);
    CheckReport report;

    // Codomain and strict monotonicity (condition (a)) on the samples.
    double prev = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double v = theta(grid[i]);
        if (!(v > 1.0)) {
            report.witnesses.push_back(
                {"theta.codomain", {grid[i]}, v, 1.0, "value must exceed 1"});
        }
        if (i > 0 && !(v > prev)) {
            report.witnesses.push_back({"theta.a.increasing",
                                        {grid[i - 1], grid[i]},
                                        prev,
                                        v,
                                        "not strictly increasing between samples"});
        }
        prev = v;
    }

    // Limit 1 at 0+ (condition (b)) on the fixed ladder x = 2^-m. The values
    // must fall monotonically (up to slack) and land within kLimitWindow of 1.
    double prev_ladder = std::numeric_limits<double>::infinity();
    double last = 0.0;
    for (int m = 1; m <= kLadderTop; ++m) {
        const double x = std::ldexp(1.0, -m);
        const double v = theta(x);
        if (!(v > 1.0)) {
            report.witnesses.push_back({"theta.codomain", {x}, v, 1.0, "value must exceed 1"});
        }
        if (!approx_leq(v, prev_ladder, tol)) {
            report.witnesses.push_back({"theta.b.limit-at-zero",
                                        {x},
                                        v,
                                        prev_ladder,
                                        "values must approach 1 monotonically"});
        }
        prev_ladder = v;
        last = v;
    }
    if (!(last <= 1.0 + kLimitWindow)) {
        report.witnesses.push_back({"theta.b.limit-at-zero",
                                    {std::ldexp(1.0, -40)},
                                    last,
                                    1.0 + kLimitWindow,
                                    "ladder does not approach 1"});
    }

    // Continuity (condition (d)) by refinement.
    scan_for_jumps(theta, grid, "theta.d.continuity", tol, report);

    return report;
}

CheckReport check_theta_membership(const ThetaFunction& theta, std::span<const double> grid,
                                   const Tolerance& tol) {
    return check_theta_membership(RealFn([theta](double x) { return theta(x); }), grid, tol);
}

CheckReport check_theta_membership(const ThetaFunction& theta, const Tolerance& tol) {
    const auto grid = default_theta_grid();
    return check_theta_membership(theta, grid, tol);
}

CheckReport check_fc_properties(const RealFn2& fc, double c, std::span<const double> axis_grid,
                                const Tolerance& tol) {
    require_grid(axis_grid, 1);
    CheckReport report;
    const double unit_slack = tol.slack(1.0);

    for (const double x : axis_grid) {
        for (const double y : axis_grid) {
            const double v = fc(x, y);
            if (!approx_leq(v, x, tol)) {
                report.witnesses.push_back(
                    {"fc.ii.bounded-by-first", {x, y}, v, x, "F(x,y) must not exceed x"});
            }
            if (approx_eq(v, x, tol) && x > 1.0 + unit_slack && y > 1.0 + unit_slack) {
                report.witnesses.push_back({"fc.iii.equality-forces-unit",
                                            {x, y},
                                            v,
                                            x,
                                            "F(x,y) = x away from x = 1 and y = 1"});
            }
            if (v > c + tol.slack(c) && !(x > y)) {
                report.witnesses.push_back(
                    {"fc.iv.order", {x, y}, v, c, "F(x,y) > c requires x > y"});
            }
        }
        const double diag = fc(x, x);
        if (!approx_leq(diag, c, tol)) {
            report.witnesses.push_back(
                {"fc.iv.diagonal", {x, x}, diag, c, "F(x,x) must not exceed c"});
        }
    }

    // Continuity (property (i)) along every grid row and column.
    for (const double y : axis_grid) {
        scan_for_jumps([&fc, y](double x) { return fc(x, y); }, axis_grid, "fc.i.continuity",
                       tol, report);
    }
    for (const double x : axis_grid) {
        scan_for_jumps([&fc, x](double y) { return fc(x, y); }, axis_grid, "fc.i.continuity",
                       tol, report);
    }

    return report;
}

CheckReport check_fc_properties(const FcOperator& fc, std::span<const double> axis_grid,
                                const Tolerance& tol) {
    return check_fc_properties(RealFn2([fc](double x, double y) { return fc(x, y); }), fc.c,
                               axis_grid, tol);
}

CheckReport check_fc_properties(const FcOperator& fc, const Tolerance& tol) {
    const auto grid = default_axis_grid();
    return check_fc_properties(fc, grid, tol);
}

CheckReport check_j_property_i(const RealFn2& j, const RealFn2& fc,
                               std::span<const double> axis_grid, const Tolerance& tol) {
    require_grid(axis_grid, 1);
    if (!(axis_grid.front() > 1.0)) {
        throw std::invalid_argument("domination sweep needs grid values strictly above 1");
    }
    (void)tol;  // strictness is checked exactly; ties are honest violations
    CheckReport report;
    for (const double x : axis_grid) {
        for (const double y : axis_grid) {
            const double jv = j(x, y);
            const double fv = fc(y, x);
            if (!(jv < fv)) {
                report.witnesses.push_back(
                    {"j.i.strict-domination", {x, y}, jv, fv, "J(x,y) must stay below F(y,x)"});
            }
        }
    }
    return report;
}

CheckReport check_j_property_i(const SimulationFunction& j, const FcOperator& fc,
                               std::span<const double> axis_grid, const Tolerance& tol) {
    return check_j_property_i(RealFn2([j](double x, double y) { return j(x, y); }),
                              RealFn2([fc](double x, double y) { return fc(x, y); }), axis_grid,
                              tol);
}

CheckReport check_j_property_i(const SimulationFunction& j, const FcOperator& fc,
                               const Tolerance& tol) {
    const auto grid = default_axis_grid();
    return check_j_property_i(j, fc, grid, tol);
}

namespace {

struct TailStats {
    double inf;
    double sup;
};

TailStats tail_stats(const std::vector<double>& xs, std::size_t window) {
    TailStats st{xs.back(), xs.back()};
    for (std::size_t i = xs.size() - window; i < xs.size(); ++i) {
        st.inf = std::min(st.inf, xs[i]);
        st.sup = std::max(st.sup, xs[i]);
    }
    return st;
}

}  // namespace

ProbeReport check_j_property_ii(const SimulationFunction& j, const ThetaFunction& theta,
                                const SequencePairProbe& probe, double c, const Tolerance& tol) {
    if (probe.a.empty() || probe.a.size() != probe.b.size()) {
        throw std::invalid_argument("probe sequences must be nonempty and equally long");
    }
    for (std::size_t i = 0; i < probe.a.size(); ++i) {
        if (!(probe.a[i] > 0.0) || !(probe.b[i] > 0.0)) {
            throw std::invalid_argument("probe entries must be positive");
        }
    }
    std::size_t window = probe.tail_window == 0 ? (probe.a.size() + 1) / 2 : probe.tail_window;
    window = std::min(window, probe.a.size());

    const TailStats a = tail_stats(probe.a, window);
    const TailStats b = tail_stats(probe.b, window);
    const double s = probe.s;

    ProbeReport report;
    const bool chain_ab = approx_leq(a.inf, s * b.sup, tol) &&
                          approx_leq(s * b.sup, s * s * a.inf, tol);
    const bool chain_ba = approx_leq(b.inf, s * a.sup, tol) &&
                          approx_leq(s * a.sup, s * s * b.inf, tol);
    if (!chain_ab || !chain_ba) {
        report.status = ProbeReport::Status::HypothesisNotMet;
        report.detail = std::string("tail estimates miss the interleaved bound chain ") +
                        (!chain_ab ? "inf a <= s sup b <= s^2 inf a" : "inf b <= s sup a <= s^2 inf b");
        return report;
    }

    double limsup = -std::numeric_limits<double>::infinity();
    for (std::size_t i = probe.a.size() - window; i < probe.a.size(); ++i) {
        limsup = std::max(limsup, j(theta(probe.a[i]), theta(probe.b[i])));
    }
    report.tail_limsup = limsup;
    if (limsup < c) {
        report.status = ProbeReport::Status::Pass;
        report.detail = "tail limsup strictly below c";
    } else {
        report.status = ProbeReport::Status::Fail;
        report.detail = "tail limsup not strictly below c";
    }
    return report;
}

MembershipRuling scaled_ratio_membership(double k, double s, const Tolerance& tol) {
    if (!(k > 0.0) || !(s >= 1.0)) {
        throw std::invalid_argument("membership is decided for k > 0 and s >= 1");
    }
    MembershipRuling ruling;
    if (k > 1.0 && approx_geq(k, s, tol)) {
        ruling.member = true;
        ruling.justification =
            "k >= s and k > 1: the bound chains force sup b <= s*inf a, so every tail value "
            "(b_n+1)/(k*(a_n+1)) is at most (s*L+1)/(k*L+k) < 1 with L = inf a > 0";
    } else if (!(k > 1.0)) {
        ruling.member = false;
        ruling.justification =
            "k <= 1: constant equal sequences give tail values 1/k >= 1, never strictly below "
            "c = 1";
    } else {
        ruling.member = false;
        ruling.justification =
            "k < s: constant sequences a_n = L, b_n = s*L satisfy the bound chains yet push the "
            "tail value (s*L+1)/(k*(L+1)) above 1 for large L";
    }
    return ruling;
}

std::optional<std::pair<double, double>> theta_power_limit(const ThetaFunction& theta) {
    switch (theta.kind) {
        case ThetaKind::AffinePlusOne:
        case ThetaKind::Exponential:
            // (theta(x)-1)/x -> 1 as x -> 0+ for both built-ins.
            return std::make_pair(1.0, 1.0);
    }
    return std::nullopt;
}

}  // namespace bmfp

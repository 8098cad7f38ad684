#pragma once

#include <algorithm>
#include <cmath>

namespace bmfp {

/// Slack for floating-point comparisons: relative away from zero, with an
/// absolute floor near zero. Exact-zero checks (the b(x,y)=0 iff x=y axiom)
/// deliberately bypass this and compare against 0.0 directly.
struct Tolerance {
    double rel = 1e-9;
    double abs = 1e-12;

    double slack(double scale) const { return std::max(abs, rel * std::fabs(scale)); }
};

/// a <= b, allowing slack proportional to the larger magnitude.
inline bool approx_leq(double a, double b, const Tolerance& tol) {
    return a <= b + tol.slack(std::max(std::fabs(a), std::fabs(b)));
}

inline bool approx_eq(double a, double b, const Tolerance& tol) {
    return std::fabs(a - b) <= tol.slack(std::max(std::fabs(a), std::fabs(b)));
}

inline bool approx_geq(double a, double b, const Tolerance& tol) {
    return approx_leq(b, a, tol);
}

}  // namespace bmfp

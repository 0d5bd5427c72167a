#pragma once

#include <functional>

namespace multicurve {

/// Derivative-free root finder on a bracketing interval: secant steps with
/// bisection fallback whenever the secant proposal leaves the bracket or
/// fails to shrink it fast enough. Requires f(lo) and f(hi) of opposite
/// sign; converges to |hi - lo| < xTol. Throws RootFindError otherwise.
double findRootBracketed(const std::function<double(double)>& f, double lo, double hi, double xTol,
                         int maxIterations = 200);

}  // namespace multicurve

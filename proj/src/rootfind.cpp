#include "multicurve/rootfind.hpp"

#include <cmath>

#include "multicurve/errors.hpp"

namespace multicurve {

double findRootBracketed(const std::function<double(double)>& f, double lo, double hi, double xTol,
                         int maxIterations) {
    double fLo = f(lo);
    double fHi = f(hi);
    if (fLo == 0.0) return lo;
    if (fHi == 0.0) return hi;
    if ((fLo > 0.0) == (fHi > 0.0)) {
        throw RootFindError("root not bracketed on [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "]");
    }
    for (int i = 0; i < maxIterations; ++i) {
        if (hi - lo < xTol) break;
        // Secant proposal on the current bracket, bisection when degenerate.
        double x = lo - fLo * (hi - lo) / (fHi - fLo);
        const double mid = 0.5 * (lo + hi);
        const double margin = 0.01 * (hi - lo);
        if (!std::isfinite(x) || x <= lo + margin || x >= hi - margin) x = mid;
        const double fx = f(x);
        if (fx == 0.0) return x;
        if ((fx > 0.0) == (fLo > 0.0)) {
            lo = x;
            fLo = fx;
        } else {
            hi = x;
            fHi = fx;
        }
    }
    if (hi - lo >= xTol) {
        throw RootFindError("root finder failed to converge to tolerance");
    }
    return 0.5 * (lo + hi);
}

}  // namespace multicurve

#include "multicurve/optimize.hpp"

#include <algorithm>
#include <cmath>

#include "multicurve/errors.hpp"

namespace multicurve {

PatternSearchResult patternSearch(const std::function<double(std::span<const double>)>& objective,
                                  std::span<const double> lower, std::span<const double> upper,
                                  std::span<const double> start,
                                  const PatternSearchOptions& options) {
    const std::size_t n = lower.size();
    if (upper.size() != n || start.size() != n || n == 0) {
        throw DomainError("pattern search: inconsistent bound/start dimensions");
    }
    std::vector<double> scale(n), offset(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(upper[i] > lower[i])) throw DomainError("pattern search: empty box");
        scale[i] = upper[i] - lower[i];
        offset[i] = lower[i];
    }

    std::vector<double> denorm(n);
    int evaluations = 0;
    const auto eval = [&](const std::vector<double>& xNorm) {
        for (std::size_t i = 0; i < n; ++i) denorm[i] = offset[i] + scale[i] * xNorm[i];
        ++evaluations;
        return objective(denorm);
    };

    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = std::clamp((start[i] - offset[i]) / scale[i], 0.0, 1.0);
    }
    double fBest = eval(x);

    double step = options.initialStep;
    std::vector<double> candidate(n), pollBest(n);
    while (step >= options.minStep && evaluations < options.maxEvaluations) {
        double fPoll = fBest;
        bool improved = false;
        for (std::size_t i = 0; i < n && evaluations < options.maxEvaluations; ++i) {
            for (double dir : {+1.0, -1.0}) {
                const double moved = std::clamp(x[i] + dir * step, 0.0, 1.0);
                if (moved == x[i]) continue;
                candidate = x;
                candidate[i] = moved;
                const double f = eval(candidate);
                if (f < fPoll) {
                    fPoll = f;
                    pollBest = candidate;
                    improved = true;
                }
                if (evaluations >= options.maxEvaluations) break;
            }
        }
        if (improved) {
            x = pollBest;
            fBest = fPoll;
            step = std::min(step * options.expansion, options.initialStep);
        } else {
            step *= 0.5;
        }
    }

    PatternSearchResult result;
    result.x.resize(n);
    for (std::size_t i = 0; i < n; ++i) result.x[i] = offset[i] + scale[i] * x[i];
    result.value = fBest;
    result.evaluations = evaluations;
    result.converged = step < options.minStep;
    return result;
}

}  // namespace multicurve

#pragma once

#include <functional>
#include <span>
#include <vector>

namespace multicurve {

struct PatternSearchOptions {
    double initialStep = 0.25;  // in box-normalized coordinates
    double minStep = 1e-12;     // termination: polling step below this
    int maxEvaluations = 10000;
    double expansion = 2.0;     // step growth after a successful poll
};

struct PatternSearchResult {
    std::vector<double> x;
    double value = 0.0;
    int evaluations = 0;
    bool converged = false;  // step shrank below minStep within the budget
};

/// Bounded derivative-free pattern search (compass/coordinate polling).
/// Coordinates are normalized to the [lower, upper] box internally. Each
/// iteration polls +-step along every axis and moves to the best improving
/// point; the step is expanded on success (capped at the initial step) and
/// halved when no poll improves. Terminates when the step drops below
/// minStep or the evaluation budget is exhausted.
PatternSearchResult patternSearch(const std::function<double(std::span<const double>)>& objective,
                                  std::span<const double> lower, std::span<const double> upper,
                                  std::span<const double> start,
                                  const PatternSearchOptions& options = {});

}  // namespace multicurve

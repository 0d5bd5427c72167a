#pragma once

#include <span>
#include <string>
#include <vector>

#include "multicurve/date.hpp"

namespace multicurve {

/// SABR parameters. alpha > 0, beta in [0,1], rho in (-1,1), nu > 0.
struct SabrParams {
    double alpha;
    double beta;
    double rho;
    double nu;

    void validate() const;
};

/// Hagan lognormal implied volatility,
///   sigma = nu * ln(F/K) / x(z) * A(F,K) / B(F,K),
/// with the order-tau correction A, the log-moneyness series B,
///   z = (nu/alpha) (FK)^((1-beta)/2) ln(F/K),
///   x(z) = ln[(sqrt(1 - 2 rho z + z^2) + z - rho) / (1 - rho)],
/// truncated exactly as printed: one tau term in A, two log-moneyness
/// terms in B. The 0/0 at K = F is replaced by its analytic limit
/// sigma_ATM = alpha / (FK)^((1-beta)/2) * A(F,K) when |ln(F/K)| < 1e-8.
double sabrVol(const SabrParams& params, double forward, double strike, double expiry);

/// One maturity of the forward-volatility surface: the strip of
/// caplets/floorlets sharing a maturity, an underlying FRA rate, and a
/// quoted strike grid (14 strikes at market scale).
struct SmileSection {
    Date maturity;
    double expiry = 0.0;   // year fraction from valuation to fixing
    double forward = 0.0;  // FRA rate of the underlying period
    std::vector<double> strikes;
    std::vector<double> marketVols;
    std::string tenor = "6M";

    void validate() const;
};

enum class CalibrationObjective { Standard, VegaWeighted };

std::string toString(CalibrationObjective objective);
CalibrationObjective calibrationObjectiveFromString(const std::string& name);

/// Per-section calibration outcome. `objective` is the square root of the
/// (weighted) sum of squared residuals, unnormalized; `weights` are all
/// 1/n for the standard objective and Black-vega shares summing to one for
/// the vega-weighted objective.
struct SectionCalibration {
    SabrParams params{};
    double objective = 0.0;
    std::vector<double> residuals;  // market vol - SABR vol, per strike
    std::vector<double> weights;
    int evaluations = 0;
    bool converged = false;
    std::string error;  // non-empty when this section failed
};

/// Default start values: alpha 4.5%, rho -10%, nu 20%.
SabrParams defaultSabrInit(double betaFixed = 0.5);

/// Calibrate one smile section by bounded pattern search over
/// (alpha, rho, nu) with beta held fixed. Bounds: alpha, nu in [1e-6, 5],
/// rho in [-0.999, 0.999]. Throws CalibrationError only when the optimizer
/// exhausts its budget without converging; the error carries best-so-far.
SectionCalibration calibrateSection(const SmileSection& section, CalibrationObjective objective,
                                    double betaFixed, const SabrParams& init);

/// Pooled residual statistics of a surface calibration, weighted per the
/// calibration scheme (uniform for standard, vega shares for vega-weighted).
struct SurfaceSummary {
    double minResidual = 0.0;
    double maxResidual = 0.0;
    double residualStdDev = 0.0;  // weighted population standard deviation
    double maxObjective = 0.0;
    std::size_t sections = 0;
    std::size_t failures = 0;
};

struct SurfaceCalibration {
    std::vector<SectionCalibration> sections;  // ordered by maturity
    SurfaceSummary summary;
};

/// Independent per-section calibration over a surface. Section failures
/// are collected in the per-section error field, not propagated.
SurfaceCalibration calibrateSurface(std::span<const SmileSection> sections,
                                    CalibrationObjective objective, double betaFixed,
                                    const SabrParams& init);

SurfaceSummary summarizeSurface(const std::vector<SectionCalibration>& sections);

}  // namespace multicurve

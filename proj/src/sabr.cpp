#include "multicurve/sabr.hpp"

#include <algorithm>
#include <cmath>

#include "multicurve/black.hpp"
#include "multicurve/errors.hpp"
#include "multicurve/optimize.hpp"

namespace multicurve {

void SabrParams::validate() const {
    if (!(alpha > 0.0)) throw DomainError("SABR alpha must be positive");
    if (beta < 0.0 || beta > 1.0) throw DomainError("SABR beta must lie in [0,1]");
    if (!(std::abs(rho) < 1.0)) throw DomainError("SABR rho must lie strictly inside (-1,1)");
    if (!(nu > 0.0)) throw DomainError("SABR nu must be positive");
}

namespace {

/// z/x(z) with x(z) = ln[(sqrt(1-2 rho z + z^2) + z - rho)/(1 - rho)].
/// Series for small z where the direct quotient loses precision.
double zOverX(double z, double rho) {
    if (std::abs(z) < 1e-4) {
        return 1.0 - 0.5 * rho * z + (2.0 - 3.0 * rho * rho) * z * z / 12.0;
    }
    const double x =
        std::log((std::sqrt(1.0 - 2.0 * rho * z + z * z) + z - rho) / (1.0 - rho));
    return z / x;
}

}  // namespace

double sabrVol(const SabrParams& params, double forward, double strike, double expiry) {
    params.validate();
    if (!(forward > 0.0) || !(strike > 0.0)) {
        throw DomainError("SABR vol needs positive forward and strike (lognormal domain)");
    }
    if (!(expiry > 0.0)) throw DomainError("SABR vol needs a positive expiry");

    const double beta = params.beta;
    const double logMoneyness = std::log(forward / strike);
    const double fkPow = std::pow(forward * strike, 0.5 * (1.0 - beta));
    const double correction =
        1.0 + (params.alpha * params.alpha * (1.0 - beta) * (1.0 - beta) / (24.0 * fkPow * fkPow) +
               params.alpha * beta * params.nu * params.rho / (4.0 * fkPow) +
               params.nu * params.nu * (2.0 - 3.0 * params.rho * params.rho) / 24.0) *
                  expiry;

    if (std::abs(logMoneyness) < 1e-8) {
        return params.alpha / fkPow * correction;  // analytic KHillsF limit, B = 1
    }
    const double lb = (1.0 - beta) * logMoneyness;
    const double series = 1.0 + lb * lb / 24.0 + lb * lb * lb * lb / 1920.0;
    const double z = params.nu / params.alpha * fkPow * logMoneyness;
    // nu ln(F/K)/x(z) == alpha/(FK)^((1-beta)/2) * z/x(z), identically.
    return params.alpha / fkPow * zOverX(z, params.rho) * correction / series;
}

void SmileSection::validate() const {
    if (strikes.empty() || strikes.size() != marketVols.size()) {
        throw DomainError("smile section needs matching non-empty strike and vol lists");
    }
    for (std::size_t j = 0; j < strikes.size(); ++j) {
        if (!(strikes[j] > 0.0)) throw DomainError("smile strike must be positive");
        if (j > 0 && !(strikes[j] > strikes[j - 1])) {
            throw DomainError("smile strikes must be strictly increasing");
        }
        if (!(marketVols[j] > 0.0)) throw DomainError("smile vols must be positive");
    }
    if (!(forward > 0.0)) throw DomainError("smile forward must be positive");
    if (!(expiry > 0.0)) throw DomainError("smile expiry must be positive");
}

std::string toString(CalibrationObjective objective) {
    return objective == CalibrationObjective::Standard ? "std" : "vega";
}

CalibrationObjective calibrationObjectiveFromString(const std::string& name) {
    if (name == "std") return CalibrationObjective::Standard;
    if (name == "vega") return CalibrationObjective::VegaWeighted;
    throw DomainError("unknown calibration objective '" + name + "'");
}

SabrParams defaultSabrInit(double betaFixed) { return {0.045, betaFixed, -0.10, 0.20}; }

namespace {

std::vector<double> sectionWeights(const SmileSection& section, CalibrationObjective objective) {
    const std::size_t n = section.strikes.size();
    std::vector<double> w(n, 1.0 / static_cast<double>(n));
    if (objective == CalibrationObjective::VegaWeighted) {
        double total = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            // Common discount/accrual/notional factors cancel in the share.
            w[j] = blackVega(section.forward, section.strikes[j], section.expiry,
                             section.marketVols[j], 1.0, 1.0, 1.0);
            total += w[j];
        }
        if (!(total > 0.0)) throw DomainError("vega weights degenerate (zero total vega)");
        for (double& wj : w) wj /= total;
    }
    return w;
}

SectionCalibration calibrateSectionImpl(const SmileSection& section,
                                        CalibrationObjective objective, double betaFixed,
                                        const SabrParams& init) {
    section.validate();
    if (betaFixed < 0.0 || betaFixed > 1.0) throw DomainError("fixed beta must lie in [0,1]");
    SabrParams start{init.alpha, betaFixed, init.rho, init.nu};
    start.validate();

    const std::vector<double> weights = sectionWeights(section, objective);
    const std::size_t n = section.strikes.size();

    const auto weightedSumSq = [&](std::span<const double> x) {
        const SabrParams p{x[0], betaFixed, x[1], x[2]};
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double r = section.marketVols[j] -
                             sabrVol(p, section.forward, section.strikes[j], section.expiry);
            sum += (r * weights[j]) * (r * weights[j]);
        }
        return sum;
    };

    const double lower[3] = {1e-6, -0.999, 1e-6};
    const double upper[3] = {5.0, 0.999, 5.0};
    const double x0[3] = {std::clamp(start.alpha, lower[0], upper[0]),
                          std::clamp(start.rho, lower[1], upper[1]),
                          std::clamp(start.nu, lower[2], upper[2])};
    PatternSearchOptions options;
    options.initialStep = 0.25;
    options.minStep = 1e-13;
    options.maxEvaluations = 10000;
    const PatternSearchResult found = patternSearch(weightedSumSq, lower, upper, x0, options);

    SectionCalibration out;
    out.params = SabrParams{found.x[0], betaFixed, found.x[1], found.x[2]};
    out.weights = weights;
    out.evaluations = found.evaluations;
    out.converged = found.converged;
    out.residuals.resize(n);
    double sumSq = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        out.residuals[j] =
            section.marketVols[j] -
            sabrVol(out.params, section.forward, section.strikes[j], section.expiry);
        const double term = objective == CalibrationObjective::Standard
                                ? out.residuals[j]
                                : out.residuals[j] * weights[j];
        sumSq += term * term;
    }
    out.objective = std::sqrt(sumSq);
    return out;
}

}  // namespace

SectionCalibration calibrateSection(const SmileSection& section, CalibrationObjective objective,
                                    double betaFixed, const SabrParams& init) {
    SectionCalibration result = calibrateSectionImpl(section, objective, betaFixed, init);
    if (!result.converged) {
        throw CalibrationError(
            "section " + section.maturity.toIso() + " did not converge within budget; best "
            "objective " + std::to_string(result.objective) + " at alpha=" +
            std::to_string(result.params.alpha) + " rho=" + std::to_string(result.params.rho) +
            " nu=" + std::to_string(result.params.nu));
    }
    return result;
}

SurfaceCalibration calibrateSurface(std::span<const SmileSection> sections,
                                    CalibrationObjective objective, double betaFixed,
                                    const SabrParams& init) {
    std::vector<const SmileSection*> ordered;
    ordered.reserve(sections.size());
    for (const SmileSection& s : sections) ordered.push_back(&s);
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const SmileSection* a, const SmileSection* b) {
                         return a->maturity < b->maturity;
                     });

    SurfaceCalibration out;
    out.sections.reserve(ordered.size());
    for (const SmileSection* s : ordered) {
        try {
            out.sections.push_back(calibrateSectionImpl(*s, objective, betaFixed, init));
            if (!out.sections.back().converged) {
                out.sections.back().error = "optimizer budget exhausted";
            }
        } catch (const Error& e) {
            SectionCalibration failed;
            failed.error = e.what();
            out.sections.push_back(std::move(failed));
        }
    }
    out.summary = summarizeSurface(out.sections);
    return out;
}

SurfaceSummary summarizeSurface(const std::vector<SectionCalibration>& sections) {
    SurfaceSummary s;
    s.sections = sections.size();
    double wSum = 0.0, wMean = 0.0;
    bool any = false;
    for (const SectionCalibration& sec : sections) {
        if (!sec.error.empty() && sec.residuals.empty()) {
            ++s.failures;
            continue;
        }
        s.maxObjective = std::max(s.maxObjective, sec.objective);
        for (std::size_t j = 0; j < sec.residuals.size(); ++j) {
            const double r = sec.residuals[j];
            const double w = sec.weights[j];
            if (!any) {
                s.minResidual = s.maxResidual = r;
                any = true;
            } else {
                s.minResidual = std::min(s.minResidual, r);
                s.maxResidual = std::max(s.maxResidual, r);
            }
            wSum += w;
            wMean += w * r;
        }
    }
    if (!any || !(wSum > 0.0)) return s;
    wMean /= wSum;
    double wVar = 0.0;
    for (const SectionCalibration& sec : sections) {
        for (std::size_t j = 0; j < sec.residuals.size(); ++j) {
            const double d = sec.residuals[j] - wMean;
            wVar += sec.weights[j] * d * d;
        }
    }
    s.residualStdDev = std::sqrt(wVar / wSum);
    return s;
}

}  // namespace multicurve

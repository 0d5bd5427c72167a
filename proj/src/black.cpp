#include "multicurve/black.hpp"

#include <cmath>
#include <string>

#include "multicurve/errors.hpp"

namespace multicurve {

namespace {
constexpr double kInvSqrt2 = 0.7071067811865475244;
constexpr double kInvSqrt2Pi = 0.3989422804014326779;

void checkLognormalDomain(double forward, double strike, double vol, double expiry) {
    if (!(forward > 0.0)) {
        throw DomainError("Black: forward must be positive, got " + std::to_string(forward));
    }
    if (!(strike > 0.0)) {
        throw DomainError("Black: strike must be positive, got " + std::to_string(strike));
    }
    if (!(vol > 0.0)) {
        throw DomainError("Black: volatility must be positive, got " + std::to_string(vol));
    }
    if (!(expiry > 0.0)) {
        throw DomainError("Black: expiry must be positive, got " + std::to_string(expiry));
    }
}
}  // namespace

double normCdf(double x) { return 0.5 * std::erfc(-x * kInvSqrt2); }

double normPdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double blackKernel(double forward, double strike, double vol, double expiry, int omega) {
    checkLognormalDomain(forward, strike, vol, expiry);
    const double stdev = vol * std::sqrt(expiry);
    const double dPlus = std::log(forward / strike) / stdev + 0.5 * stdev;
    const double dMinus = dPlus - stdev;
    const double w = static_cast<double>(omega);
    return w * (forward * normCdf(w * dPlus) - strike * normCdf(w * dMinus));
}

double blackVega(double forward, double strike, double expiry, double vol, double discount,
                 double accrual, double notional) {
    checkLognormalDomain(forward, strike, vol, expiry);
    const double stdev = vol * std::sqrt(expiry);
    const double dPlus = std::log(forward / strike) / stdev + 0.5 * stdev;
    return notional * discount * accrual * forward * normPdf(dPlus) * std::sqrt(expiry);
}

}  // namespace multicurve

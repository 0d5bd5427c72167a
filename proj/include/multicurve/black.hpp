#pragma once

namespace multicurve {

/// Standard normal CDF via erfc; accurate to ~1e-16 over the real line.
double normCdf(double x);

/// Standard normal density.
double normPdf(double x);

/// Undiscounted Black kernel for one caplet/floorlet:
///   omega * [F * N(omega d+) - K * N(omega d-)],
/// d+- = (ln(F/K) +- sigma^2 expiry / 2) / (sigma sqrt(expiry)).
/// omega = +1 caplet, -1 floorlet. Requires F, K > 0 (lognormal domain),
/// sigma > 0, expiry > 0; throws DomainError otherwise.
double blackKernel(double forward, double strike, double vol, double expiry, int omega);

/// Black vega of a caplet/floorlet:
///   notional * discount * accrual * F * pdf(d+) * sqrt(expiry).
/// Identical for caplet and floorlet at equal inputs.
double blackVega(double forward, double strike, double expiry, double vol, double discount,
                 double accrual, double notional);

}  // namespace multicurve

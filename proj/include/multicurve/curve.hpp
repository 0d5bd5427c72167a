#pragma once

#include <string>
#include <vector>

#include "multicurve/date.hpp"
#include "multicurve/daycount.hpp"

namespace multicurve {

enum class CurveRole { Discounting, Forwarding };

enum class Interpolation { LogLinearDf };

struct CurvePillar {
    Date date;
    double df;
};

/// Discount-factor term structure. Pillars are strictly increasing with
/// positive discount factors; P(reference) = 1 exactly (a synthetic pillar
/// is inserted when absent). Interpolation is linear in log discount
/// factor, i.e. piecewise-constant forward rates. Queries beyond the last
/// pillar throw ExtrapolationError, never extrapolate silently.
///
/// Immutable after construction; concurrent queries need no locking.
class Curve {
public:
    Curve(Date referenceDate, std::vector<CurvePillar> pillars,
          CurveRole role = CurveRole::Discounting, std::string tenor = {},
          Interpolation interpolation = Interpolation::LogLinearDf);

    /// Flat curve at a continuously-compounded ACT/365F zero rate:
    /// P(t,T) = exp(-rate * yf(ACT/365F, t, T)) for every T up to horizon.
    static Curve flat(Date referenceDate, double rate, Date horizon,
                      CurveRole role = CurveRole::Discounting, std::string tenor = {});

    Date referenceDate() const { return referenceDate_; }
    Date lastPillarDate() const { return pillars_.back().date; }
    const std::vector<CurvePillar>& pillars() const { return pillars_; }
    CurveRole role() const { return role_; }
    const std::string& tenor() const { return tenor_; }
    Interpolation interpolation() const { return interpolation_; }

    double discountFactor(Date T) const;

    /// Continuously-compounded zero rate, ACT/365F. Undefined at the
    /// reference date (throws DomainError).
    double zeroRate(Date T) const;

private:
    Date referenceDate_;
    std::vector<CurvePillar> pillars_;
    CurveRole role_;
    std::string tenor_;
    Interpolation interpolation_;
};

/// Simple forward rate from the curve's discount factors (the classical
/// formula): F(t; T1, T2) = (P(t,T1)/P(t,T2) - 1) / tau.
double simpleForwardRate(const Curve& curve, Date T1, Date T2,
                         DayCount convention = DayCount::Act360);

/// FRA rate projected from a forwarding curve. Same arithmetic as
/// simpleForwardRate evaluated on C_x; bit-identical on the same curve.
double fraRate(const Curve& forwardingCurve, Date T1, Date T2,
               DayCount convention = DayCount::Act360);

std::string toString(CurveRole role);
CurveRole curveRoleFromString(const std::string& name);
std::string toString(Interpolation interp);
Interpolation interpolationFromString(const std::string& name);

}  // namespace multicurve

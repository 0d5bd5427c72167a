#include "multicurve/curve.hpp"

#include <algorithm>
#include <cmath>

#include "multicurve/errors.hpp"

namespace multicurve {

Curve::Curve(Date referenceDate, std::vector<CurvePillar> pillars, CurveRole role,
             std::string tenor, Interpolation interpolation)
    : referenceDate_(referenceDate),
      pillars_(std::move(pillars)),
      role_(role),
      tenor_(std::move(tenor)),
      interpolation_(interpolation) {
    if (pillars_.empty() || pillars_.front().date != referenceDate_) {
        pillars_.insert(pillars_.begin(), CurvePillar{referenceDate_, 1.0});
    }
    if (pillars_.front().df != 1.0) {
        throw DomainError("curve pillar at the reference date must have df = 1");
    }
    Date prev = referenceDate_;
    for (std::size_t i = 0; i < pillars_.size(); ++i) {
        if (i > 0 && pillars_[i].date <= prev) {
            throw DomainError("curve pillars not strictly increasing at " +
                              pillars_[i].date.toIso());
        }
        if (!(pillars_[i].df > 0.0)) {
            throw DomainError("curve discount factor not positive at " + pillars_[i].date.toIso());
        }
        prev = pillars_[i].date;
    }
}

Curve Curve::flat(Date referenceDate, double rate, Date horizon, CurveRole role,
                  std::string tenor) {
    if (horizon <= referenceDate) throw DomainError("flat curve horizon not after reference");
    const double tau = yearFraction(DayCount::Act365Fixed, referenceDate, horizon);
    return Curve(referenceDate, {{horizon, std::exp(-rate * tau)}}, role, std::move(tenor));
}

double Curve::discountFactor(Date T) const {
    if (T < referenceDate_) {
        throw DomainError("discount factor requested before curve reference date (" + T.toIso() +
                          " < " + referenceDate_.toIso() + ")");
    }
    if (T > pillars_.back().date) {
        throw ExtrapolationError("discount factor requested beyond last pillar (" + T.toIso() +
                                 " > " + pillars_.back().date.toIso() + ")");
    }
    const auto it = std::lower_bound(
        pillars_.begin(), pillars_.end(), T,
        [](const CurvePillar& p, Date d) { return p.date < d; });
    if (it->date == T) return it->df;
    const CurvePillar& right = *it;
    const CurvePillar& left = *(it - 1);
    const double w = static_cast<double>(daysBetween(left.date, T)) /
                     static_cast<double>(daysBetween(left.date, right.date));
    return std::exp((1.0 - w) * std::log(left.df) + w * std::log(right.df));
}

double Curve::zeroRate(Date T) const {
    if (T <= referenceDate_) {
        throw DomainError("zero rate undefined at or before the reference date");
    }
    const double tau = yearFraction(DayCount::Act365Fixed, referenceDate_, T);
    return -std::log(discountFactor(T)) / tau;
}

double simpleForwardRate(const Curve& curve, Date T1, Date T2, DayCount convention) {
    if (T1 >= T2) {
        throw DomainError("forward rate needs T1 < T2, got " + T1.toIso() + " >= " + T2.toIso());
    }
    const double tau = yearFraction(convention, T1, T2);
    return (curve.discountFactor(T1) / curve.discountFactor(T2) - 1.0) / tau;
}

double fraRate(const Curve& forwardingCurve, Date T1, Date T2, DayCount convention) {
    return simpleForwardRate(forwardingCurve, T1, T2, convention);
}

std::string toString(CurveRole role) {
    return role == CurveRole::Discounting ? "discounting" : "forwarding";
}

CurveRole curveRoleFromString(const std::string& name) {
    if (name == "discounting") return CurveRole::Discounting;
    if (name == "forwarding") return CurveRole::Forwarding;
    throw DomainError("unknown curve role '" + name + "'");
}

std::string toString(Interpolation interp) {
    (void)interp;
    return "loglinear-df";
}

Interpolation interpolationFromString(const std::string& name) {
    if (name == "loglinear-df") return Interpolation::LogLinearDf;
    throw DomainError("unknown interpolation '" + name + "'");
}

}  // namespace multicurve

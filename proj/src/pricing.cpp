#include "multicurve/pricing.hpp"

#include <cmath>

#include "multicurve/black.hpp"
#include "multicurve/errors.hpp"

namespace multicurve {

std::string toString(Methodology m) {
    switch (m) {
        case Methodology::SingleCurve: return "single";
        case Methodology::MultiNoCsa: return "multi-nocsa";
        case Methodology::MultiCsa: return "multi-csa";
    }
    return "?";
}

Methodology methodologyFromString(const std::string& name) {
    if (name == "single") return Methodology::SingleCurve;
    if (name == "multi-nocsa") return Methodology::MultiNoCsa;
    if (name == "multi-csa") return Methodology::MultiCsa;
    throw DomainError("unknown methodology '" + name + "'");
}

MethodologyContext::MethodologyContext(std::shared_ptr<const Curve> d,
                                       std::shared_ptr<const Curve> f, Methodology m)
    : discounting(std::move(d)), forwarding(std::move(f)), tag(m) {
    if (!discounting || !forwarding) throw DomainError("methodology context needs both curves");
    if (tag == Methodology::SingleCurve && discounting.get() != forwarding.get()) {
        throw DomainError("SingleCurve context requires one shared curve object");
    }
    if (discounting->referenceDate() != forwarding->referenceDate()) {
        throw DomainError("context curves have different reference dates");
    }
}

MethodologyContext MethodologyContext::singleCurve(std::shared_ptr<const Curve> curve) {
    auto copy = curve;
    return MethodologyContext(std::move(curve), std::move(copy), Methodology::SingleCurve);
}

SwapSpec::SwapSpec(double notional_, int payerSign_, double fixedRate_, Schedule fixedLeg_,
                   Schedule floatLeg_)
    : notional(notional_),
      payerSign(checkedSign(payerSign_)),
      fixedRate(fixedRate_),
      fixedLeg(std::move(fixedLeg_)),
      floatLeg(std::move(floatLeg_)) {
    if (fixedLeg.start() != floatLeg.start() || fixedLeg.maturity() != floatLeg.maturity()) {
        throw DomainError("swap legs must share start and maturity dates");
    }
}

SwapSpec makeVanillaSwap(Date start, Date maturity, double fixedRate, int payerSign,
                         double notional, int fixedFrequencyMonths, DayCount fixedDayCount,
                         int floatFrequencyMonths, DayCount floatDayCount) {
    return SwapSpec(notional, payerSign, fixedRate,
                    legSchedule(start, maturity, fixedFrequencyMonths, fixedDayCount),
                    legSchedule(start, maturity, floatFrequencyMonths, floatDayCount));
}

CapFloorSpec::CapFloorSpec(double notional_, int capFloorSign_, double strike_,
                           Schedule schedule_, std::vector<double> capletVols_)
    : notional(notional_),
      capFloorSign(checkedSign(capFloorSign_)),
      strike(strike_),
      schedule(std::move(schedule_)),
      capletVols(std::move(capletVols_)) {
    const std::size_t caplets = schedule.size() > 1 ? schedule.size() - 1 : 0;
    if (capletVols.size() != caplets) {
        throw DomainError("cap/floor needs " + std::to_string(caplets) +
                          " caplet vols (first caplet excluded), got " +
                          std::to_string(capletVols.size()));
    }
}

CapFloorSpec makeTermVolCapFloor(double notional, int capFloorSign, double strike,
                                 Schedule schedule, double termVol) {
    const std::size_t caplets = schedule.size() > 1 ? schedule.size() - 1 : 0;
    return CapFloorSpec(notional, capFloorSign, strike, std::move(schedule),
                        std::vector<double>(caplets, termVol));
}

double priceFra(const MethodologyContext& ctx, Date T1, Date T2, double strike, int omega,
                double notional, DayCount convention) {
    const double tau = yearFraction(convention, T1, T2);
    const double fra = fraRate(*ctx.forwarding, T1, T2, convention);
    return notional * ctx.discounting->discountFactor(T2) * checkedSign(omega) * (fra - strike) *
           tau;
}

double fairFraRate(const MethodologyContext& ctx, Date T1, Date T2, DayCount convention) {
    return fraRate(*ctx.forwarding, T1, T2, convention);
}

double floatingLegPv(const MethodologyContext& ctx, const Schedule& leg, double notional) {
    double pv = 0.0;
    for (std::size_t k = 0; k < leg.size(); ++k) {
        const double tau = leg.accrualFraction(k);
        const double fra =
            fraRate(*ctx.forwarding, leg.accrualStart(k), leg.accrualEnd(k), leg.dayCount());
        pv += ctx.discounting->discountFactor(leg.paymentDate(k)) * fra * tau;
    }
    return notional * pv;
}

double annuity(const MethodologyContext& ctx, const Schedule& leg) {
    double a = 0.0;
    for (std::size_t j = 0; j < leg.size(); ++j) {
        a += ctx.discounting->discountFactor(leg.paymentDate(j)) * leg.accrualFraction(j);
    }
    return a;
}

double swapNpv(const MethodologyContext& ctx, const SwapSpec& spec) {
    const double floating = floatingLegPv(ctx, spec.floatLeg, 1.0);
    const double fixed = spec.fixedRate * annuity(ctx, spec.fixedLeg);
    return spec.notional * spec.payerSign * (floating - fixed);
}

double parRate(const MethodologyContext& ctx, const SwapSpec& spec) {
    const double a = annuity(ctx, spec.fixedLeg);
    if (!(a > 0.0)) throw DomainError("swap annuity not positive");
    return floatingLegPv(ctx, spec.floatLeg, 1.0) / a;
}

double basisSwapSpread(const MethodologyContext& ctxShortTenor,
                       const MethodologyContext& ctxLongTenor, const Schedule& legShortTenor,
                       const Schedule& legLongTenor) {
    if (ctxShortTenor.discounting.get() != ctxLongTenor.discounting.get()) {
        throw DomainError("basis swap legs must share one discounting curve");
    }
    const double pvShort = floatingLegPv(ctxShortTenor, legShortTenor, 1.0);
    const double pvLong = floatingLegPv(ctxLongTenor, legLongTenor, 1.0);
    const double a = annuity(ctxShortTenor, legShortTenor);
    if (!(a > 0.0)) throw DomainError("basis swap annuity not positive");
    return (pvLong - pvShort) / a;
}

double blackCapFloor(const MethodologyContext& ctx, const CapFloorSpec& spec) {
    const Date valuation = ctx.discounting->referenceDate();
    const Schedule& sched = spec.schedule;
    const double w = static_cast<double>(spec.capFloorSign);
    double value = 0.0;
    for (std::size_t k = 1; k < sched.size(); ++k) {
        const Date fixing = sched.accrualStart(k);
        const Date payment = sched.paymentDate(k);
        const double tau = sched.accrualFraction(k);
        const double fra = fraRate(*ctx.forwarding, fixing, sched.accrualEnd(k), sched.dayCount());
        const double df = ctx.discounting->discountFactor(payment);
        double caplet;
        if (fixing <= valuation) {
            caplet = std::max(w * (fra - spec.strike), 0.0);  // fixed: intrinsic only
        } else {
            const double expiry = yearFraction(DayCount::Act365Fixed, valuation, fixing);
            const double vol = spec.capletVols[k - 1];
            if (!(vol > 0.0)) {
                throw DomainError("caplet volatility must be positive at period " +
                                  std::to_string(k + 1));
            }
            caplet = blackKernel(fra, spec.strike, vol, expiry, spec.capFloorSign);
        }
        value += spec.notional * df * caplet * tau;
    }
    return value;
}

}  // namespace multicurve

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "multicurve/curve.hpp"
#include "multicurve/schedule.hpp"

namespace multicurve {

enum class Methodology { SingleCurve, MultiNoCsa, MultiCsa };

std::string toString(Methodology m);
Methodology methodologyFromString(const std::string& name);

/// Pair of (discounting, forwarding) curves a pricer runs under.
/// SingleCurve requires both members to be the same curve object; the
/// classical formulas then fall out of the modern ones by construction.
struct MethodologyContext {
    std::shared_ptr<const Curve> discounting;
    std::shared_ptr<const Curve> forwarding;
    Methodology tag;

    MethodologyContext(std::shared_ptr<const Curve> d, std::shared_ptr<const Curve> f,
                       Methodology m);

    static MethodologyContext singleCurve(std::shared_ptr<const Curve> curve);
};

/// Payer/receiver (cap/floor) sign. +1 pays fixed / caps, -1 receives / floors.
inline int checkedSign(int omega) { return omega >= 0 ? 1 : -1; }

struct SwapSpec {
    double notional;
    int payerSign;  // +1 payer (pays fixed), -1 receiver
    double fixedRate;
    Schedule fixedLeg;
    Schedule floatLeg;

    SwapSpec(double notional, int payerSign, double fixedRate, Schedule fixedLeg,
             Schedule floatLeg);
};

/// Vanilla swap with market-standard legs: fixed 30E/360 annual vs
/// floating ACT/360 on the rate tenor.
SwapSpec makeVanillaSwap(Date start, Date maturity, double fixedRate, int payerSign,
                         double notional, int fixedFrequencyMonths = 12,
                         DayCount fixedDayCount = DayCount::ThirtyE360,
                         int floatFrequencyMonths = 6, DayCount floatDayCount = DayCount::Act360);

struct CapFloorSpec {
    double notional;
    int capFloorSign;  // +1 cap, -1 floor
    double strike;
    Schedule schedule;                // floating schedule on the rate tenor
    std::vector<double> capletVols;   // one entry per priced caplet, periods 2..m

    CapFloorSpec(double notional, int capFloorSign, double strike, Schedule schedule,
                 std::vector<double> capletVols);
};

/// Cap/floor with one term volatility applied to every caplet.
CapFloorSpec makeTermVolCapFloor(double notional, int capFloorSign, double strike,
                                 Schedule schedule, double termVol);

/// FRA value: N * P_d(t,T2) * omega * (FRA(T1,T2) - K) * tau.
double priceFra(const MethodologyContext& ctx, Date T1, Date T2, double strike, int omega,
                double notional, DayCount convention = DayCount::Act360);

/// Fair FRA rate under the context (the FRA rate off the forwarding curve).
double fairFraRate(const MethodologyContext& ctx, Date T1, Date T2,
                   DayCount convention = DayCount::Act360);

/// Present value of the floating leg: N * sum P_d(T_k) * FRA_k * tau_k.
double floatingLegPv(const MethodologyContext& ctx, const Schedule& leg, double notional);

/// Discounted annuity of a schedule: sum P_d(S_j) * tau_j.
double annuity(const MethodologyContext& ctx, const Schedule& leg);

/// Swap value: N * omega * [sum P_d FRA tau - K * A_d].
double swapNpv(const MethodologyContext& ctx, const SwapSpec& spec);

/// Equilibrium swap rate: sum P_d FRA tau / A_d.
double parRate(const MethodologyContext& ctx, const SwapSpec& spec);

/// Equilibrium basis-swap spread added to the shorter-tenor leg x:
/// Z = [sum P_d FRA_y tau_y - sum P_d FRA_x tau_x] / A_d(leg x).
/// Both contexts must share the same discounting curve object.
double basisSwapSpread(const MethodologyContext& ctxShortTenor,
                       const MethodologyContext& ctxLongTenor, const Schedule& legShortTenor,
                       const Schedule& legLongTenor);

/// Black cap/floor: sum of caplet values over periods 2..m. The first
/// caplet, fixing at the start, is excluded from the premium. Caplets
/// whose fixing date is not after the valuation date contribute intrinsic
/// value only.
double blackCapFloor(const MethodologyContext& ctx, const CapFloorSpec& spec);

}  // namespace multicurve

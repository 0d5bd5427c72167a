#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "multicurve/curve.hpp"
#include "multicurve/date.hpp"
#include "multicurve/daycount.hpp"

namespace multicurve {

enum class InstrumentKind { Deposit, Fra, Swap, Ois, BasisSwap };

std::string toString(InstrumentKind kind);
InstrumentKind instrumentKindFromString(const std::string& name);

/// One bootstrap pillar instrument. Start/maturity come either as tenors
/// relative to the spot date or as explicit dates.
struct Quote {
    InstrumentKind kind = InstrumentKind::Deposit;
    std::optional<Tenor> tenorStart;
    std::optional<Tenor> tenorEnd;
    std::optional<Date> startDate;
    std::optional<Date> endDate;
    std::string rateTenor = "6M";  // underlying rate tenor x ("ON" for OIS)
    double value = 0.0;            // quoted rate, decimal
    DayCount dayCount = DayCount::Act360;            // deposit/FRA/OIS accrual, swap float leg
    DayCount fixedDayCount = DayCount::ThirtyE360;   // swap fixed leg
    int fixedFrequencyMonths = 12;
    int floatFrequencyMonths = 6;

    Date resolveStart(Date spot) const;
    Date resolveEnd(Date spot) const;
    void validate() const;
};

/// Input to one curve construction. Quotes are sorted by maturity on
/// validation; two quotes sharing a pillar date are rejected.
struct BootstrapSpec {
    Date referenceDate;
    Date spot;  // tenor anchor; defaults to the reference date
    CurveRole targetRole = CurveRole::Discounting;
    std::string tenorLabel;  // "6M", "ON", ... for forwarding/OIS curves
    std::vector<Quote> quotes;
    std::shared_ptr<const Curve> exogenousDiscounting;  // CSA forwarding bootstraps only
    double tolerance = 1e-14;  // root-finder tolerance on the pillar discount factor

    /// Sorts quotes by resolved maturity and checks pillar uniqueness.
    void prepare();
};

/// Classical bootstrap: one curve serves both discounting and forwarding.
/// Every input quote reprices on the returned curve to within tolerance.
Curve bootstrapSingle(BootstrapSpec spec);

/// Forwarding bootstrap against an exogenous discounting curve: deposits
/// and FRAs pin the forwarding pseudo-discount factors directly; swap
/// pillars solve the modern par-swap equation with P_d exogenous.
Curve bootstrapForwarding(BootstrapSpec spec);

/// OIS discounting bootstrap: annual fixed leg vs compounded overnight
/// floating leg, the latter valued by the telescoping identity
/// P_d(start) - P_d(end) per coupon period.
Curve bootstrapOis(BootstrapSpec spec);

/// Per-pillar repricing diagnostic: |model rate - quote| after the build.
struct PillarDiagnostic {
    Date pillar;
    InstrumentKind kind;
    double quote;
    double repriceError;
};

std::vector<PillarDiagnostic> repriceDiagnostics(const Curve& curve, const BootstrapSpec& spec);

}  // namespace multicurve

#include "multicurve/bootstrap.hpp"

#include <algorithm>
#include <iostream>
#include <set>

#include "multicurve/errors.hpp"
#include "multicurve/rootfind.hpp"
#include "multicurve/schedule.hpp"

namespace multicurve {

std::string toString(InstrumentKind kind) {
    switch (kind) {
        case InstrumentKind::Deposit: return "Deposit";
        case InstrumentKind::Fra: return "FRA";
        case InstrumentKind::Swap: return "Swap";
        case InstrumentKind::Ois: return "OIS";
        case InstrumentKind::BasisSwap: return "BasisSwap";
    }
    return "?";
}

InstrumentKind instrumentKindFromString(const std::string& name) {
    if (name == "Deposit") return InstrumentKind::Deposit;
    if (name == "FRA") return InstrumentKind::Fra;
    if (name == "Swap") return InstrumentKind::Swap;
    if (name == "OIS") return InstrumentKind::Ois;
    if (name == "BasisSwap") return InstrumentKind::BasisSwap;
    throw DomainError("unknown instrument kind '" + name + "'");
}

Date Quote::resolveStart(Date spot) const {
    if (startDate) return *startDate;
    if (tenorStart) return tenorStart->applyTo(spot);
    return spot;
}

Date Quote::resolveEnd(Date spot) const {
    if (endDate) return *endDate;
    if (tenorEnd) return tenorEnd->applyTo(spot);
    throw SpecError("quote has neither endDate nor tenorEnd");
}

void Quote::validate() const {
    if (!(value > -1.0)) throw SpecError("quoted rate must exceed -1");
    if (fixedFrequencyMonths <= 0 || floatFrequencyMonths <= 0) {
        throw SpecError("quote frequencies must be positive");
    }
}

void BootstrapSpec::prepare() {
    if (spot < referenceDate) throw SpecError("spot date before reference date");
    if (quotes.empty()) throw SpecError("bootstrap needs at least one quote");
    for (const Quote& q : quotes) {
        q.validate();
        if (q.resolveEnd(spot) <= q.resolveStart(spot)) {
            throw SpecError("quote maturity not after start");
        }
    }
    std::sort(quotes.begin(), quotes.end(), [&](const Quote& a, const Quote& b) {
        return a.resolveEnd(spot) < b.resolveEnd(spot);
    });
    std::set<Date> seen;
    for (const Quote& q : quotes) {
        if (!seen.insert(q.resolveEnd(spot)).second) {
            throw SpecError("two quotes share the pillar date " + q.resolveEnd(spot).toIso());
        }
    }
    if (quotes.front().resolveEnd(spot) <= referenceDate) {
        throw SpecError("first quote matures on or before the reference date");
    }
}

namespace {

/// Model rate of one quote given a discounting and a forwarding curve.
double modelRate(const Curve& discounting, const Curve& forwarding, const Quote& q, Date spot) {
    const Date start = q.resolveStart(spot);
    const Date end = q.resolveEnd(spot);
    switch (q.kind) {
        case InstrumentKind::Deposit:
        case InstrumentKind::Fra:
            // Deposits pin the forwarding pseudo-discount factors the same
            // way FRAs do; on a single curve both reduce to the classical
            // simple forward rate.
            return fraRate(forwarding, start, end, q.dayCount);
        case InstrumentKind::Swap: {
            const Schedule fixedLeg = legSchedule(start, end, q.fixedFrequencyMonths, q.fixedDayCount);
            const Schedule floatLeg = legSchedule(start, end, q.floatFrequencyMonths, q.dayCount);
            double floating = 0.0;
            for (std::size_t k = 0; k < floatLeg.size(); ++k) {
                floating += discounting.discountFactor(floatLeg.paymentDate(k)) *
                            fraRate(forwarding, floatLeg.accrualStart(k), floatLeg.accrualEnd(k),
                                    q.dayCount) *
                            floatLeg.accrualFraction(k);
            }
            double annuity = 0.0;
            for (std::size_t j = 0; j < fixedLeg.size(); ++j) {
                annuity += discounting.discountFactor(fixedLeg.paymentDate(j)) *
                           fixedLeg.accrualFraction(j);
            }
            return floating / annuity;
        }
        case InstrumentKind::Ois: {
            // Floating leg valued by the telescoping identity
            // P_d(start) - P_d(end); fixed leg annual.
            const Schedule fixedLeg = legSchedule(start, end, 12, q.dayCount);
            double annuity = 0.0;
            for (std::size_t j = 0; j < fixedLeg.size(); ++j) {
                annuity += discounting.discountFactor(fixedLeg.paymentDate(j)) *
                           fixedLeg.accrualFraction(j);
            }
            return (discounting.discountFactor(start) - discounting.discountFactor(end)) / annuity;
        }
        case InstrumentKind::BasisSwap:
            throw SpecError("basis swap quotes are not supported as bootstrap pillars");
    }
    throw SpecError("unknown quote kind");
}

Curve bootstrapImpl(BootstrapSpec& spec) {
    spec.prepare();
    const bool exogenous = spec.exogenousDiscounting != nullptr;
    if (exogenous) {
        const Date lastQuote = spec.quotes.back().resolveEnd(spec.spot);
        if (spec.exogenousDiscounting->lastPillarDate() < lastQuote) {
            throw SpecError("discounting curve ends " +
                            spec.exogenousDiscounting->lastPillarDate().toIso() +
                            ", before the last quote pillar " + lastQuote.toIso());
        }
    }
    std::vector<CurvePillar> pillars;
    for (const Quote& q : spec.quotes) {
        const Date pillarDate = q.resolveEnd(spec.spot);
        const auto reprice = [&](double trialDf) {
            std::vector<CurvePillar> trial = pillars;
            trial.push_back({pillarDate, trialDf});
            const Curve curve(spec.referenceDate, std::move(trial), spec.targetRole,
                              spec.tenorLabel);
            const Curve& disc = exogenous ? *spec.exogenousDiscounting : curve;
            return modelRate(disc, curve, q, spec.spot) - q.value;
        };
        const double prevDf = pillars.empty() ? 1.0 : pillars.back().df;
        try {
            const double df = findRootBracketed(reprice, 1e-8, 2.0 * prevDf, spec.tolerance);
            pillars.push_back({pillarDate, df});
        } catch (const RootFindError& e) {
            throw BootstrapError("pillar " + pillarDate.toIso() + " (" + toString(q.kind) +
                                 " quote " + std::to_string(q.value) + "): " + e.what());
        }
    }
    return Curve(spec.referenceDate, std::move(pillars), spec.targetRole, spec.tenorLabel);
}

bool mixedRateTenors(const std::vector<Quote>& quotes) {
    std::string tenor;
    for (const Quote& q : quotes) {
        if (q.kind == InstrumentKind::Ois) continue;
        if (tenor.empty()) tenor = q.rateTenor;
        if (q.rateTenor != tenor) return true;
    }
    return false;
}

}  // namespace

Curve bootstrapSingle(BootstrapSpec spec) {
    if (spec.exogenousDiscounting) {
        throw SpecError("single-curve bootstrap takes no exogenous discounting curve");
    }
    if (mixedRateTenors(spec.quotes)) {
        std::cerr << "warning: mixed underlying rate tenors in single-curve bootstrap\n";
    }
    return bootstrapImpl(spec);
}

Curve bootstrapForwarding(BootstrapSpec spec) {
    if (!spec.exogenousDiscounting) {
        throw SpecError("forwarding bootstrap needs an exogenous discounting curve");
    }
    if (mixedRateTenors(spec.quotes)) {
        throw SpecError("forwarding bootstrap quotes must share one underlying rate tenor");
    }
    spec.targetRole = CurveRole::Forwarding;
    return bootstrapImpl(spec);
}

Curve bootstrapOis(BootstrapSpec spec) {
    if (spec.exogenousDiscounting) {
        throw SpecError("OIS bootstrap takes no exogenous discounting curve");
    }
    for (const Quote& q : spec.quotes) {
        if (q.kind != InstrumentKind::Ois) {
            throw SpecError("OIS bootstrap accepts only OIS quotes, got " + toString(q.kind));
        }
    }
    if (spec.tenorLabel.empty()) spec.tenorLabel = "ON";
    return bootstrapImpl(spec);
}

std::vector<PillarDiagnostic> repriceDiagnostics(const Curve& curve, const BootstrapSpec& spec) {
    std::vector<PillarDiagnostic> out;
    out.reserve(spec.quotes.size());
    const Curve& disc = spec.exogenousDiscounting ? *spec.exogenousDiscounting : curve;
    for (const Quote& q : spec.quotes) {
        const double model = modelRate(disc, curve, q, spec.spot);
        out.push_back({q.resolveEnd(spec.spot), q.kind, q.value, model - q.value});
    }
    return out;
}

}  // namespace multicurve

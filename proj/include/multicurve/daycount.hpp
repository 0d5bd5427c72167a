#pragma once

#include <string>

#include "multicurve/date.hpp"

namespace multicurve {

/// Day-count conventions. Market defaults in this engine: ACT/360 for
/// floating legs, deposits, FRAs and OIS; 30E/360 for fixed swap legs;
/// ACT/365F for option expiries and zero rates.
enum class DayCount {
    Act360,
    Act365Fixed,
    ThirtyE360,
};

/// Accrual fraction between two dates under the given convention.
/// Throws DomainError when end < start.
double yearFraction(DayCount convention, Date start, Date end);

std::string toString(DayCount dc);
DayCount dayCountFromString(const std::string& name);

}  // namespace multicurve

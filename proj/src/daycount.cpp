#include "multicurve/daycount.hpp"

#include <algorithm>

#include "multicurve/errors.hpp"

namespace multicurve {

double yearFraction(DayCount convention, Date start, Date end) {
    if (end < start) {
        throw DomainError("yearFraction: end " + end.toIso() + " before start " + start.toIso());
    }
    switch (convention) {
        case DayCount::Act360:
            return daysBetween(start, end) / 360.0;
        case DayCount::Act365Fixed:
            return daysBetween(start, end) / 365.0;
        case DayCount::ThirtyE360: {
            const int d1 = std::min(start.day(), 30);
            const int d2 = std::min(end.day(), 30);
            return (360.0 * (end.year() - start.year()) + 30.0 * (end.month() - start.month()) +
                    (d2 - d1)) /
                   360.0;
        }
    }
    throw DomainError("yearFraction: unknown convention");
}

std::string toString(DayCount dc) {
    switch (dc) {
        case DayCount::Act360: return "ACT/360";
        case DayCount::Act365Fixed: return "ACT/365F";
        case DayCount::ThirtyE360: return "30E/360";
    }
    return "?";
}

DayCount dayCountFromString(const std::string& name) {
    if (name == "ACT/360") return DayCount::Act360;
    if (name == "ACT/365F") return DayCount::Act365Fixed;
    if (name == "30E/360") return DayCount::ThirtyE360;
    throw DomainError("unknown day-count convention '" + name + "'");
}

}  // namespace multicurve

#include "multicurve/schedule.hpp"

#include <algorithm>

#include "multicurve/errors.hpp"

namespace multicurve {

Schedule::Schedule(Date start, std::vector<Date> paymentDates, int frequencyMonths,
                   DayCount dayCount)
    : start_(start),
      paymentDates_(std::move(paymentDates)),
      frequencyMonths_(frequencyMonths),
      dayCount_(dayCount) {
    if (paymentDates_.empty()) throw ScheduleError("schedule has no payment dates");
    Date prev = start_;
    for (Date d : paymentDates_) {
        if (d <= prev) throw ScheduleError("schedule dates not strictly increasing");
        prev = d;
    }
}

Schedule Schedule::tail(std::size_t first) const {
    if (first >= size()) throw ScheduleError("schedule tail past the last period");
    std::vector<Date> dates(paymentDates_.begin() + static_cast<std::ptrdiff_t>(first),
                            paymentDates_.end());
    return Schedule(accrualStart(first), std::move(dates), frequencyMonths_, dayCount_);
}

Schedule generateSchedule(Date start, Date maturity, int frequencyMonths, DayCount convention) {
    if (maturity <= start) throw ScheduleError("schedule maturity not after start");
    if (frequencyMonths <= 0) throw ScheduleError("schedule frequency must be positive");
    const int months = wholeMonthsBetween(start, maturity);
    if (months % frequencyMonths != 0) {
        throw ScheduleError("tenor " + std::to_string(months) + "M is not a multiple of " +
                            std::to_string(frequencyMonths) + "M");
    }
    const int periods = months / frequencyMonths;
    std::vector<Date> dates(static_cast<std::size_t>(periods));
    for (int i = 0; i < periods; ++i) {
        dates[static_cast<std::size_t>(i)] = maturity.addMonths(-frequencyMonths * (periods - 1 - i));
    }
    if (maturity.addMonths(-frequencyMonths * periods) != start) {
        throw ScheduleError("backward generation from " + maturity.toIso() +
                            " does not land on start " + start.toIso());
    }
    return Schedule(start, std::move(dates), frequencyMonths, convention);
}

Schedule legSchedule(Date start, Date maturity, int frequencyMonths, DayCount convention) {
    if (maturity <= start) throw ScheduleError("leg maturity not after start");
    int months = 0;
    try {
        months = wholeMonthsBetween(start, maturity);
    } catch (const ScheduleError&) {
        months = -1;  // broken period: single-period stub below
    }
    if (months < 0 || months <= frequencyMonths) {
        return Schedule(start, {maturity}, frequencyMonths, convention);
    }
    return generateSchedule(start, maturity, frequencyMonths, convention);
}

}  // namespace multicurve

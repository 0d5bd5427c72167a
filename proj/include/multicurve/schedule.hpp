#pragma once

#include <cstddef>
#include <vector>

#include "multicurve/date.hpp"
#include "multicurve/daycount.hpp"

namespace multicurve {

/// Payment schedule for one leg: ordered payment dates with accrual
/// start/end pairs. Accrual periods tile [start, maturity] exactly.
class Schedule {
public:
    Schedule(Date start, std::vector<Date> paymentDates, int frequencyMonths, DayCount dayCount);

    Date start() const { return start_; }
    Date maturity() const { return paymentDates_.back(); }
    int frequencyMonths() const { return frequencyMonths_; }
    DayCount dayCount() const { return dayCount_; }

    std::size_t size() const { return paymentDates_.size(); }
    Date paymentDate(std::size_t i) const { return paymentDates_[i]; }
    Date accrualStart(std::size_t i) const { return i == 0 ? start_ : paymentDates_[i - 1]; }
    Date accrualEnd(std::size_t i) const { return paymentDates_[i]; }
    double accrualFraction(std::size_t i) const {
        return yearFraction(dayCount_, accrualStart(i), accrualEnd(i));
    }
    const std::vector<Date>& paymentDates() const { return paymentDates_; }

    /// Sub-schedule containing periods [first, size).
    Schedule tail(std::size_t first) const;

private:
    Date start_;
    std::vector<Date> paymentDates_;
    int frequencyMonths_;
    DayCount dayCount_;
};

/// Backward-generated schedule from the maturity. The tenor must be an
/// integer multiple of the frequency; throws ScheduleError otherwise.
Schedule generateSchedule(Date start, Date maturity, int frequencyMonths, DayCount convention);

/// Schedule for an instrument leg: single period when the tenor does not
/// exceed the frequency (short OIS and deposits), regular otherwise.
Schedule legSchedule(Date start, Date maturity, int frequencyMonths, DayCount convention);

}  // namespace multicurve

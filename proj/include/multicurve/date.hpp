#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace multicurve {

/// Calendar-free date: a serial day count (days since 1970-01-01).
///
/// No holiday calendars or business-day adjustment anywhere in the engine;
/// dates are used exactly as generated. Month arithmetic clamps the
/// day-of-month to the month end (Jan 31 + 1M = Feb 28/29).
class Date {
public:
    Date() : serial_(0) {}
    explicit Date(std::int32_t serial) : serial_(serial) {}
    Date(int year, int month, int day);

    static Date fromIso(const std::string& iso);  // "YYYY-MM-DD"
    std::string toIso() const;

    std::int32_t serial() const { return serial_; }
    int year() const;
    int month() const;
    int day() const;

    Date addDays(int n) const { return Date(serial_ + n); }
    Date addMonths(int n) const;
    Date addYears(int n) const { return addMonths(12 * n); }

    friend int daysBetween(Date a, Date b) { return b.serial_ - a.serial_; }

    auto operator<=>(const Date&) const = default;

private:
    std::int32_t serial_;
};

/// Whole months between two dates if b == a + n months exactly
/// (after end-of-month clamping); throws ScheduleError otherwise.
int wholeMonthsBetween(Date a, Date b);

/// Relative date offset parsed from strings like "1D", "2W", "6M", "10Y".
struct Tenor {
    int days = 0;
    int months = 0;

    static Tenor parse(const std::string& text);
    Date applyTo(Date d) const;
    std::string str() const;
};

}  // namespace multicurve

#include "multicurve/date.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>

#include "multicurve/errors.hpp"

namespace multicurve {

namespace {

namespace chr = std::chrono;

chr::year_month_day toYmd(std::int32_t serial) {
    return chr::year_month_day(chr::sys_days(chr::days(serial)));
}

std::int32_t toSerial(chr::year_month_day ymd) {
    return static_cast<std::int32_t>(chr::sys_days(ymd).time_since_epoch().count());
}

}  // namespace

Date::Date(int year, int month, int day) {
    const chr::year_month_day ymd(chr::year(year), chr::month(static_cast<unsigned>(month)),
                                  chr::day(static_cast<unsigned>(day)));
    if (!ymd.ok()) {
        throw DomainError("invalid calendar date " + std::to_string(year) + "-" +
                          std::to_string(month) + "-" + std::to_string(day));
    }
    serial_ = toSerial(ymd);
}

Date Date::fromIso(const std::string& iso) {
    int y = 0, m = 0, d = 0;
    if (std::sscanf(iso.c_str(), "%d-%d-%d", &y, &m, &d) != 3) {
        throw DomainError("cannot parse ISO date '" + iso + "'");
    }
    return Date(y, m, d);
}

std::string Date::toIso() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year(), month(), day());
    return buf;
}

int Date::year() const { return static_cast<int>(toYmd(serial_).year()); }
int Date::month() const { return static_cast<int>(static_cast<unsigned>(toYmd(serial_).month())); }
int Date::day() const { return static_cast<int>(static_cast<unsigned>(toYmd(serial_).day())); }

Date Date::addMonths(int n) const {
    auto ymd = toYmd(serial_) + chr::months(n);
    if (!ymd.ok()) {
        // Day-of-month beyond the target month: clamp to month end.
        ymd = ymd.year() / ymd.month() / chr::last;
    }
    return Date(toSerial(ymd));
}

int wholeMonthsBetween(Date a, Date b) {
    const int approx =
        12 * (b.year() - a.year()) + (b.month() - a.month()) + (b.day() >= a.day() ? 0 : 0);
    for (int m : {approx, approx - 1, approx + 1}) {
        if (a.addMonths(m) == b) return m;
    }
    throw ScheduleError("interval " + a.toIso() + " .. " + b.toIso() +
                        " is not a whole number of months");
}

Tenor Tenor::parse(const std::string& text) {
    if (text.size() < 2) throw DomainError("cannot parse tenor '" + text + "'");
    int n = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size() - 1;
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec != std::errc() || ptr != last) throw DomainError("cannot parse tenor '" + text + "'");
    switch (*last) {
        case 'D': case 'd': return {n, 0};
        case 'W': case 'w': return {7 * n, 0};
        case 'M': case 'm': return {0, n};
        case 'Y': case 'y': return {0, 12 * n};
        default: throw DomainError("unknown tenor unit in '" + text + "'");
    }
}

Date Tenor::applyTo(Date d) const { return d.addMonths(months).addDays(days); }

std::string Tenor::str() const {
    if (months == 0) return std::to_string(days) + "D";
    if (months % 12 == 0 && days == 0) return std::to_string(months / 12) + "Y";
    std::string s = std::to_string(months) + "M";
    if (days != 0) s += std::to_string(days) + "D";
    return s;
}

}  // namespace multicurve

#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace ballotwire {

/// Calendar day in UTC.
using Date = std::chrono::sys_days;
/// UTC instant, second precision.
using Timestamp = std::chrono::sys_seconds;

/// Accepts `YYYY-MM-DD` and `M/D/YYYY`.
std::optional<Date> parse_date(std::string_view text);

/// Accepts `YYYY-MM-DD[T ]HH:MM:SS[.fff][Z|±HH:MM|±HHMM]`. Offsets are folded
/// into UTC; a missing offset is read as UTC.
std::optional<Timestamp> parse_timestamp(std::string_view text);

std::string format_date(Date d);
std::string format_timestamp(Timestamp t);

inline Date utc_day(Timestamp t) { return std::chrono::floor<std::chrono::days>(t); }

/// Inclusive day range.
struct DateRange {
    Date start;
    Date end;

    long days() const { return (end - start).count() + 1; }
    bool contains(Date d) const { return d >= start && d <= end; }
};

}  // namespace ballotwire

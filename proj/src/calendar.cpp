#include "ballotwire/calendar.hpp"

#include <charconv>
#include <cstdio>

namespace ballotwire {
namespace {

using namespace std::chrono;

// Reads exactly `width` digits (or 1..width when `exact` is false).
bool read_int(std::string_view& s, int width, bool exact, int& out) {
    std::size_t n = 0;
    while (n < s.size() && n < static_cast<std::size_t>(width) && s[n] >= '0' && s[n] <= '9')
        ++n;
    if (n == 0 || (exact && n != static_cast<std::size_t>(width)))
        return false;
    std::from_chars(s.data(), s.data() + n, out);
    s.remove_prefix(n);
    return true;
}

bool eat(std::string_view& s, char c) {
    if (s.empty() || s.front() != c)
        return false;
    s.remove_prefix(1);
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::optional<Date> make_date(int y, int m, int d) {
    year_month_day ymd{year{y}, month{static_cast<unsigned>(m)}, day{static_cast<unsigned>(d)}};
    if (!ymd.ok())
        return std::nullopt;
    return sys_days{ymd};
}

}  // namespace

std::optional<Date> parse_date(std::string_view text) {
    std::string_view s = trim(text);
    int y = 0, m = 0, d = 0;
    std::string_view iso = s;
    if (read_int(iso, 4, true, y) && eat(iso, '-') && read_int(iso, 2, true, m) && eat(iso, '-') &&
        read_int(iso, 2, true, d) && iso.empty())
        return make_date(y, m, d);
    std::string_view us = s;
    if (read_int(us, 2, false, m) && eat(us, '/') && read_int(us, 2, false, d) && eat(us, '/') &&
        read_int(us, 4, true, y) && us.empty())
        return make_date(y, m, d);
    return std::nullopt;
}

std::optional<Timestamp> parse_timestamp(std::string_view text) {
    std::string_view s = trim(text);
    int y = 0, mo = 0, d = 0, h = 0, mi = 0, se = 0;
    if (!(read_int(s, 4, true, y) && eat(s, '-') && read_int(s, 2, true, mo) && eat(s, '-') &&
          read_int(s, 2, true, d)))
        return std::nullopt;
    if (!(eat(s, 'T') || eat(s, ' ')))
        return std::nullopt;
    if (!(read_int(s, 2, true, h) && eat(s, ':') && read_int(s, 2, true, mi) && eat(s, ':') &&
          read_int(s, 2, true, se)))
        return std::nullopt;
    if (eat(s, '.')) {
        int frac = 0;
        if (!read_int(s, 9, false, frac))
            return std::nullopt;
    }
    int offset_minutes = 0;
    if (eat(s, 'Z')) {
    } else if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        const int sign = s.front() == '-' ? -1 : 1;
        s.remove_prefix(1);
        int oh = 0, om = 0;
        if (!read_int(s, 2, true, oh))
            return std::nullopt;
        eat(s, ':');
        if (!read_int(s, 2, true, om))
            return std::nullopt;
        if (oh > 23 || om > 59)
            return std::nullopt;
        offset_minutes = sign * (oh * 60 + om);
    }
    if (!s.empty() || h > 23 || mi > 59 || se > 60)
        return std::nullopt;
    auto day_point = make_date(y, mo, d);
    if (!day_point)
        return std::nullopt;
    return Timestamp{*day_point} + hours{h} + minutes{mi} + seconds{se} - minutes{offset_minutes};
}

std::string format_date(Date d) {
    const year_month_day ymd{d};
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

std::string format_timestamp(Timestamp t) {
    const Date d = utc_day(t);
    const hh_mm_ss hms{t - d};
    char buf[32];
    std::snprintf(buf, sizeof buf, "%sT%02d:%02d:%02dZ", format_date(d).c_str(),
                  static_cast<int>(hms.hours().count()), static_cast<int>(hms.minutes().count()),
                  static_cast<int>(hms.seconds().count()));
    return buf;
}

}  // namespace ballotwire

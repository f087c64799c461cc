#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ballotwire {

/// Neumaier-compensated running sum. Result is independent of input order to
/// within a few ulps of the exact sum, where naive accumulation is not.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    CompensatedSum& operator+=(double x) noexcept {
        add(x);
        return *this;
    }
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Shortest text that parses back to the same double.
std::string format_number(double value);

/// Whole-field decimal parse; rejects trailing garbage, inf and nan.
std::optional<double> parse_number(std::string_view text);

/// Non-negative integer count. Integral decimals such as "10.0" are accepted
/// since scraped exports often store counts as floats.
std::optional<std::uint64_t> parse_count(std::string_view text);

/// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace ballotwire

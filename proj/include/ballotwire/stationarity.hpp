#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ballotwire/features.hpp"

namespace ballotwire {

/// Deterministic terms in the test regression.
enum class AdfRegression { None, Constant, ConstantTrend };

struct AdfOptions {
    /// Upper bound for the lag search, or the exact lag when `autolag` is off.
    /// Defaults to ceil(12 (n/100)^(1/4)), capped at n/2 - ntrend - 1.
    std::optional<int> max_lag;
    bool autolag = true;  // AIC over 0..max_lag on a common sample
    double alpha = 0.05;
    AdfRegression regression = AdfRegression::Constant;
};

struct AdfResult {
    double statistic = 0.0;
    double p_value = 1.0;
    int lag_used = 0;
    int n_obs = 0;  // series length - lag_used - 1
    int max_lag = 0;
    std::optional<double> aic;  // of the selected lag, when autolag ran
    bool reject_unit_root = false;
};

/// Augmented Dickey-Fuller unit-root test. Regresses the first difference on
/// the lagged level, `lag` lagged differences and the deterministic terms;
/// the statistic is the t-ratio of the level coefficient.
AdfResult adf_test(std::span<const double> series, const AdfOptions& options = {});

/// MacKinnon (1994) approximate asymptotic p-value for a single I(1) series.
double mackinnon_pvalue(double statistic, AdfRegression regression = AdfRegression::Constant);

std::vector<double> difference(std::span<const double> series, int order = 1);

/// Inverse of one differencing pass: first, first + d0, first + d0 + d1, ...
std::vector<double> undifference(std::span<const double> diffs, double first);

struct ColumnStationarity {
    Candidate candidate = Candidate::A;
    std::size_t column = 0;  // 0..4, feature order of DailyFeatureRow::values()
    std::string name;
    AdfResult before;
    AdfResult after;  // on the once-differenced column
};

struct StationarityReport {
    std::vector<ColumnStationarity> columns;  // 10 entries: 5 features x 2 candidates
    double alpha = 0.05;

    int stationary_before() const;
    int stationary_after() const;
    int nonstationary_before() const { return static_cast<int>(columns.size()) - stationary_before(); }
    int nonstationary_after() const { return static_cast<int>(columns.size()) - stationary_after(); }
};

StationarityReport frame_stationarity_report(std::span<const FeatureFrame> frames, const AdfOptions& options = {});

enum class DifferencingScope {
    Features,  // features differenced, prev_poll kept in levels
    All,       // prev_poll differenced as well
};

/// One differencing pass; the first row is dropped.
FeatureFrame apply_differencing(const FeatureFrame& frame, DifferencingScope scope = DifferencingScope::Features);

std::vector<double> feature_column(const FeatureFrame& frame, std::size_t column);

}  // namespace ballotwire

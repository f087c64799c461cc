#include "ballotwire/stationarity.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ballotwire/error.hpp"

namespace ballotwire {
namespace {

// MacKinnon, J.G. (1994), "Approximate Asymptotic Distribution Functions for
// Unit-Root and Cointegration Tests", JBES 12(2), 167-176, N = 1 rows.
// Below tau_star the small-p polynomial applies, above it the large-p one;
// the fitted value is mapped through the standard normal CDF. Outside
// [tau_min, tau_max] the p-value saturates to 0 or 1. Coefficients are the
// MacKinnon table values times the table scalings (1, 1, 1e-2) and
// (1, 1e-1, 1e-1, 1e-2), in ascending powers.
struct MacKinnonRow {
    double tau_max;
    double tau_min;
    double tau_star;
    std::array<double, 3> small_p;
    std::array<double, 4> large_p;
};

constexpr double kInf = std::numeric_limits<double>::infinity();

const MacKinnonRow& mackinnon_row(AdfRegression r) {
    static const MacKinnonRow none{kInf, -19.04, -1.04,
                                   {0.6344, 1.2378, 3.2496 * 1e-2},
                                   {0.4797, 9.3557 * 1e-1, -0.6999 * 1e-1, 3.3066 * 1e-2}};
    static const MacKinnonRow constant{2.74, -18.83, -1.61,
                                       {2.1659, 1.4412, 3.8269 * 1e-2},
                                       {1.7339, 9.3202 * 1e-1, -1.2745 * 1e-1, -1.0368 * 1e-2}};
    static const MacKinnonRow trend{0.7, -16.18, -2.89,
                                    {3.2512, 1.6047, 4.9588 * 1e-2},
                                    {2.5261, 6.1654 * 1e-1, -3.7956 * 1e-1, -6.0285 * 1e-2}};
    switch (r) {
    case AdfRegression::None: return none;
    case AdfRegression::ConstantTrend: return trend;
    default: return constant;
    }
}

int trend_terms(AdfRegression r) {
    switch (r) {
    case AdfRegression::None: return 0;
    case AdfRegression::Constant: return 1;
    case AdfRegression::ConstantTrend: return 2;
    }
    return 1;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

struct OlsFit {
    double t_first = 0.0;  // t-ratio of column 0
    double ssr = 0.0;
    int rank = 0;
};

OlsFit ols(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
    const Eigen::Index n = X.rows();
    const Eigen::Index k = X.cols();
    if (n <= k)
        throw Error(ErrorKind::DegenerateRegression, "ADF regression has no residual degrees of freedom");
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(X);
    const Eigen::MatrixXd R = qr.matrixQR().topLeftCorner(k, k).triangularView<Eigen::Upper>();
    const double scale = R.diagonal().cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < k; ++i)
        if (!(std::fabs(R(i, i)) > 1e-12 * scale))
            throw Error(ErrorKind::DegenerateRegression, "ADF design matrix is singular");
    const Eigen::VectorXd beta = qr.solve(y);
    const Eigen::VectorXd resid = y - X * beta;
    OlsFit fit;
    fit.ssr = resid.squaredNorm();
    fit.rank = static_cast<int>(k);
    const Eigen::MatrixXd Rinv = R.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(k, k));
    const double var_first = Rinv.row(0).squaredNorm() * fit.ssr / static_cast<double>(n - k);
    fit.t_first = beta(0) / std::sqrt(var_first);
    return fit;
}

// Design for `lags` lagged differences on the last `nobs` usable rows:
// columns [level, dx_{t-1}..dx_{t-lags}, const, trend].
void build_design(std::span<const double> x, const std::vector<double>& dx, int lags, int nobs, int ntrend,
                  Eigen::MatrixXd& X, Eigen::VectorXd& y) {
    const int first = static_cast<int>(dx.size()) - nobs;  // index into dx of the first response
    X.resize(nobs, 1 + lags + ntrend);
    y.resize(nobs);
    for (int r = 0; r < nobs; ++r) {
        const int t = first + r;
        y(r) = dx[t];
        X(r, 0) = x[t];
        for (int j = 1; j <= lags; ++j)
            X(r, j) = dx[t - j];
        if (ntrend >= 1)
            X(r, 1 + lags) = 1.0;
        if (ntrend >= 2)
            X(r, 2 + lags) = static_cast<double>(r + 1);
    }
}

double gaussian_aic(double ssr, int nobs, int rank) {
    const double n = nobs;
    const double llf = -n / 2.0 * (std::log(2.0 * std::numbers::pi) + std::log(ssr / n) + 1.0);
    return -2.0 * llf + 2.0 * rank;
}

}  // namespace

double mackinnon_pvalue(double statistic, AdfRegression regression) {
    const MacKinnonRow& row = mackinnon_row(regression);
    if (statistic > row.tau_max)
        return 1.0;
    if (statistic < row.tau_min)
        return 0.0;
    double fitted = 0.0;
    if (statistic <= row.tau_star) {
        for (auto it = row.small_p.rbegin(); it != row.small_p.rend(); ++it)
            fitted = fitted * statistic + *it;
    } else {
        for (auto it = row.large_p.rbegin(); it != row.large_p.rend(); ++it)
            fitted = fitted * statistic + *it;
    }
    return normal_cdf(fitted);
}

AdfResult adf_test(std::span<const double> x, const AdfOptions& options) {
    const int n = static_cast<int>(x.size());
    const int ntrend = trend_terms(options.regression);
    if (!(options.alpha > 0.0 && options.alpha < 1.0))
        throw Error(ErrorKind::InvalidArgument, "alpha must lie in (0, 1)");
    for (double v : x)
        if (!std::isfinite(v))
            throw Error(ErrorKind::InvalidArgument, "series contains non-finite values");
    if (n == 0)
        throw Error(ErrorKind::SeriesTooShort, "empty series");
    const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    if (*lo == *hi)
        throw Error(ErrorKind::ConstantSeries, "series is constant");

    const int cap = n / 2 - ntrend - 1;
    int max_lag = 0;
    if (options.max_lag) {
        max_lag = *options.max_lag;
        if (max_lag < 0)
            throw Error(ErrorKind::InvalidArgument, "max_lag must be non-negative");
        if (max_lag > cap)
            throw Error(ErrorKind::SeriesTooShort, "series of length " + std::to_string(n) +
                                                       " is too short for max_lag " + std::to_string(max_lag));
    } else {
        max_lag = std::min(cap, static_cast<int>(std::ceil(12.0 * std::pow(n / 100.0, 0.25))));
        if (max_lag < 0)
            throw Error(ErrorKind::SeriesTooShort, "series of length " + std::to_string(n) + " is too short");
    }

    std::vector<double> dx(static_cast<std::size_t>(n - 1));
    for (int t = 0; t + 1 < n; ++t)
        dx[t] = x[t + 1] - x[t];

    AdfResult result;
    result.max_lag = max_lag;
    int lag = max_lag;
    Eigen::MatrixXd X;
    Eigen::VectorXd y;
    if (options.autolag) {
        // every candidate lag is fit on the same max_lag-trimmed sample so the
        // information criteria are comparable
        const int common = n - 1 - max_lag;
        double best = std::numeric_limits<double>::infinity();
        for (int k = 0; k <= max_lag; ++k) {
            build_design(x, dx, k, common, ntrend, X, y);
            const OlsFit fit = ols(X, y);
            const double aic = gaussian_aic(fit.ssr, common, fit.rank);
            if (aic < best) {
                best = aic;
                lag = k;
            }
        }
        result.aic = best;
    }
    const int nobs = n - 1 - lag;
    build_design(x, dx, lag, nobs, ntrend, X, y);
    const OlsFit fit = ols(X, y);

    result.statistic = fit.t_first;
    result.lag_used = lag;
    result.n_obs = nobs;
    result.p_value = mackinnon_pvalue(fit.t_first, options.regression);
    result.reject_unit_root = result.p_value < options.alpha;
    return result;
}

std::vector<double> difference(std::span<const double> series, int order) {
    if (order < 0)
        throw Error(ErrorKind::InvalidArgument, "difference order must be non-negative");
    if (series.size() <= static_cast<std::size_t>(order))
        throw Error(ErrorKind::SeriesTooShort, "series too short to difference " + std::to_string(order) + " times");
    std::vector<double> out(series.begin(), series.end());
    for (int pass = 0; pass < order; ++pass) {
        for (std::size_t i = 0; i + 1 < out.size(); ++i)
            out[i] = out[i + 1] - out[i];
        out.pop_back();
    }
    return out;
}

std::vector<double> undifference(std::span<const double> diffs, double first) {
    std::vector<double> out{first};
    out.reserve(diffs.size() + 1);
    for (double d : diffs)
        out.push_back(out.back() + d);
    return out;
}

int StationarityReport::stationary_before() const {
    return static_cast<int>(std::count_if(columns.begin(), columns.end(),
                                          [](const ColumnStationarity& c) { return c.before.reject_unit_root; }));
}

int StationarityReport::stationary_after() const {
    return static_cast<int>(std::count_if(columns.begin(), columns.end(),
                                          [](const ColumnStationarity& c) { return c.after.reject_unit_root; }));
}

std::vector<double> feature_column(const FeatureFrame& frame, std::size_t column) {
    std::vector<double> out;
    out.reserve(frame.rows.size());
    for (const auto& r : frame.rows)
        out.push_back(r.values()[column]);
    return out;
}

StationarityReport frame_stationarity_report(std::span<const FeatureFrame> frames, const AdfOptions& options) {
    StationarityReport report;
    report.alpha = options.alpha;
    for (const auto& frame : frames) {
        for (std::size_t c = 0; c < kFeatureCount; ++c) {
            const auto levels = feature_column(frame, c);
            ColumnStationarity col;
            col.candidate = frame.candidate;
            col.column = c;
            col.name = std::string(kFeatureKeys[c]);
            col.before = adf_test(levels, options);
            col.after = adf_test(difference(levels, 1), options);
            report.columns.push_back(std::move(col));
        }
    }
    return report;
}

FeatureFrame apply_differencing(const FeatureFrame& frame, DifferencingScope scope) {
    if (frame.rows.size() < 2)
        throw Error(ErrorKind::SeriesTooShort, "differencing needs at least 2 rows");
    FeatureFrame out;
    out.candidate = frame.candidate;
    for (std::size_t i = 1; i < frame.rows.size(); ++i) {
        const auto cur = frame.rows[i].values();
        const auto prev = frame.rows[i - 1].values();
        std::array<double, kFeatureCount> d{};
        for (std::size_t k = 0; k < kFeatureCount; ++k)
            d[k] = cur[k] - prev[k];
        DailyFeatureRow row;
        row.date = frame.rows[i].date;
        row.set_values(d);
        out.rows.push_back(row);
        out.prev_poll.push_back(scope == DifferencingScope::All ? frame.prev_poll[i] - frame.prev_poll[i - 1]
                                                                : frame.prev_poll[i]);
    }
    return out;
}

}  // namespace ballotwire

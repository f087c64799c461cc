#include "ballotwire/supervise.hpp"

#include <map>

#include "ballotwire/error.hpp"

namespace ballotwire {

SupervisedSet SupervisedSet::slice(std::size_t begin, std::size_t count) const {
    if (begin + count > size())
        throw Error(ErrorKind::SpecMismatch, "slice past the end of the set");
    SupervisedSet out;
    out.mode = mode;
    out.dates.assign(dates.begin() + begin, dates.begin() + begin + count);
    out.level.assign(level.begin() + begin, level.begin() + begin + count);
    out.X = X.middleRows(static_cast<Eigen::Index>(begin), static_cast<Eigen::Index>(count));
    out.y = y.segment(static_cast<Eigen::Index>(begin), static_cast<Eigen::Index>(count));
    return out;
}

SupervisedSet make_sliding_window(const FeatureFrame& frame, std::span<const PollSnapshot> polls, TargetMode mode) {
    if (frame.prev_poll.size() != frame.rows.size())
        throw Error(ErrorKind::LengthMismatch, "frame has " + std::to_string(frame.rows.size()) + " rows but " +
                                                   std::to_string(frame.prev_poll.size()) + " lag values");
    std::map<Date, double> share;
    for (const auto& p : polls)
        share[p.date] = p.share(frame.candidate);

    const auto n = static_cast<Eigen::Index>(frame.rows.size());
    SupervisedSet set;
    set.mode = mode;
    set.X.resize(n, kInputCount);
    set.y.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& row = frame.rows[static_cast<std::size_t>(i)];
        auto today = share.find(row.date);
        if (today == share.end())
            throw Error(ErrorKind::MissingTarget, "no poll on " + format_date(row.date));
        const auto v = row.values();
        for (std::size_t k = 0; k < kFeatureCount; ++k)
            set.X(i, static_cast<Eigen::Index>(k)) = v[k];
        set.X(i, kFeatureCount) = frame.prev_poll[static_cast<std::size_t>(i)];
        double target = today->second;
        if (mode == TargetMode::Difference) {
            auto yesterday = share.find(row.date - std::chrono::days{1});
            if (yesterday == share.end())
                throw Error(ErrorKind::MissingTarget, "no poll on " + format_date(row.date - std::chrono::days{1}));
            target -= yesterday->second;
        }
        set.y(i) = target;
        set.dates.push_back(row.date);
        set.level.push_back(today->second);
    }
    return set;
}

SplitSets split(const SupervisedSet& set, const SplitSpec& spec) {
    if (spec.n_train == 0 || spec.n_val == 0 || spec.n_test == 0)
        throw Error(ErrorKind::SpecMismatch, "every split part needs at least one row");
    if (spec.total() != set.size())
        throw Error(ErrorKind::SpecMismatch, "split " + std::to_string(spec.n_train) + "/" +
                                                 std::to_string(spec.n_val) + "/" + std::to_string(spec.n_test) +
                                                 " does not cover " + std::to_string(set.size()) + " rows");
    return {set.slice(0, spec.n_train), set.slice(spec.n_train, spec.n_val),
            set.slice(spec.n_train + spec.n_val, spec.n_test)};
}

SupervisedSet concat(const SupervisedSet& a, const SupervisedSet& b) {
    if (a.mode != b.mode)
        throw Error(ErrorKind::SpecMismatch, "cannot join sets with different target modes");
    if (a.X.cols() != b.X.cols())
        throw Error(ErrorKind::DimensionMismatch, "cannot join sets with different widths");
    SupervisedSet out;
    out.mode = a.mode;
    out.dates = a.dates;
    out.dates.insert(out.dates.end(), b.dates.begin(), b.dates.end());
    out.level = a.level;
    out.level.insert(out.level.end(), b.level.begin(), b.level.end());
    out.X.resize(a.X.rows() + b.X.rows(), a.X.cols());
    out.X << a.X, b.X;
    out.y.resize(a.y.size() + b.y.size());
    out.y << a.y, b.y;
    return out;
}

std::vector<double> recursive_forecast(const RowPredictor& predict, const Eigen::MatrixXd& features, double anchor) {
    if (features.cols() != static_cast<Eigen::Index>(kFeatureCount))
        throw Error(ErrorKind::DimensionMismatch, "forecast features need " + std::to_string(kFeatureCount) +
                                                      " columns, got " + std::to_string(features.cols()));
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(features.rows()));
    Eigen::RowVectorXd input(kInputCount);
    double lag = anchor;
    for (Eigen::Index d = 0; d < features.rows(); ++d) {
        input.head(kFeatureCount) = features.row(d);
        input(kFeatureCount) = lag;
        lag = predict(input);
        out.push_back(lag);
    }
    return out;
}

Eigen::MatrixXd feature_block(const SupervisedSet& set) { return set.X.leftCols(kFeatureCount); }

std::vector<double> to_levels(std::span<const double> predictions, TargetMode mode, double last_level) {
    std::vector<double> out(predictions.begin(), predictions.end());
    if (mode == TargetMode::Difference) {
        double level = last_level;
        for (double& v : out) {
            level += v;
            v = level;
        }
    }
    return out;
}

}  // namespace ballotwire

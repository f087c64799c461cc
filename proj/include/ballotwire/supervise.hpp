#pragma once

#include <Eigen/Dense>
#include <array>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "ballotwire/calendar.hpp"
#include "ballotwire/features.hpp"
#include "ballotwire/ingest.hpp"

namespace ballotwire {

inline constexpr std::size_t kInputCount = kFeatureCount + 1;

/// Column order of SupervisedSet::X. Written into every artifact.
inline constexpr std::array<std::string_view, kInputCount> kInputColumns{
    "sum_sent_likes",          "sum_sent_retweets",          "sum_sent_followers",
    "mean_likes_per_follower", "mean_retweets_per_follower", "prev_poll"};

enum class TargetMode {
    Level,       // y(d) = poll(d)
    Difference,  // y(d) = poll(d) - poll(d - 1), paired with a differenced prev_poll
};

struct SupervisedSet {
    std::vector<Date> dates;
    Eigen::MatrixXd X;  // rows(dates) x kInputCount
    Eigen::VectorXd y;
    /// Polling level on each date. Equal to y in Level mode; used to turn
    /// differenced predictions back into shares.
    std::vector<double> level;
    TargetMode mode = TargetMode::Level;

    std::size_t size() const { return dates.size(); }
    SupervisedSet slice(std::size_t begin, std::size_t count) const;
};

/// X(d) = (five features at d, prev_poll at d); y(d) = poll share at d.
SupervisedSet make_sliding_window(const FeatureFrame& frame, std::span<const PollSnapshot> polls,
                                  TargetMode mode = TargetMode::Level);

struct SplitSpec {
    std::size_t n_train = 12;
    std::size_t n_val = 3;
    std::size_t n_test = 4;
    std::size_t total() const { return n_train + n_val + n_test; }
};

struct SplitSets {
    SupervisedSet train;
    SupervisedSet val;
    SupervisedSet test;
};

SplitSets split(const SupervisedSet& set, const SplitSpec& spec);

/// Rows of `a` followed by rows of `b`.
SupervisedSet concat(const SupervisedSet& a, const SupervisedSet& b);

/// Maps one input row (kInputCount values) to a prediction.
using RowPredictor = std::function<double(const Eigen::RowVectorXd&)>;

/// Multi-step forecast over `features` (h x kFeatureCount). Day 1 takes
/// `anchor` as its lag input, every later day the previous prediction.
std::vector<double> recursive_forecast(const RowPredictor& predict, const Eigen::MatrixXd& features, double anchor);

/// Feature block (without the lag column) of a set.
Eigen::MatrixXd feature_block(const SupervisedSet& set);

/// Shares implied by model-space predictions following the last known row.
/// Level mode is the identity; Difference mode accumulates from `last_level`.
std::vector<double> to_levels(std::span<const double> predictions, TargetMode mode, double last_level);

}  // namespace ballotwire

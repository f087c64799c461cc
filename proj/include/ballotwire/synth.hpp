#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "ballotwire/calendar.hpp"
#include "ballotwire/ingest.hpp"
#include "ballotwire/models.hpp"

namespace ballotwire {

enum class SynthRegime {
    Stationary,  // AR(1) polls, day-to-day independent engagement
    RandomWalk,  // polls, tweet mood and engagement scale all integrate their shocks
};

/// Seeded generator settings. One xoshiro256** stream (seeded with `seed`)
/// is consumed in a fixed order: polls for A then B, then per day and per
/// candidate the hashtag tweets followed by the candidate posts.
struct SynthSpec {
    std::uint64_t seed = 7;
    int n_days = 20;
    int tweets_per_day = 40;
    int posts_per_day = 3;
    double ar_phi = 0.6;
    double noise_sigma = 0.3;
    /// Per-candidate intercept of the AR(1) law; the stationary mean is
    /// drift / (1 - ar_phi). Defaults put A at 52 and B at 47.
    std::array<double, 2> drift{52.0 * 0.4, 47.0 * 0.4};
    /// Share of positive tweets on day d is 0.5 + sentiment_link * dpoll(d) / 2,
    /// clamped to [0.05, 0.95].
    double sentiment_link = 1.0;
    Date start = Date{std::chrono::year{2020} / 10 / 15};  // first tweet day
    SynthRegime regime = SynthRegime::Stationary;
    std::array<std::uint64_t, 2> candidate_followers{11'000'000, 88'000'000};

    void validate() const;  // throws InvalidArgument
    DateRange tweet_days() const;
};

/// n_days + 1 daily snapshots starting the day before spec.start. The chain
/// starts from the stationary mean (RandomWalk: from the same level with unit root).
std::vector<PollSnapshot> gen_polling(const SynthSpec& spec);

/// The single-stream generator: polls, then tweets and posts. gen_polling
/// is exactly the poll part of this stream.
Corpus gen_corpus(const SynthSpec& spec);

/// Words whose reference valences are exact negatives of each other, in
/// (positive, negative) pairs. Tweet texts carry exactly one of them.
inline constexpr std::array<std::array<const char*, 2>, 4> kSynthWords{{
    {"great", "disaster"}, {"happy", "hate"}, {"trust", "liar"}, {"hope", "weak"}}};

struct SynthFiles {
    std::array<std::filesystem::path, 2> tweets;
    std::array<std::filesystem::path, 2> posts;
    std::filesystem::path polls;
};

/// Writes the five input CSVs into `dir` under fixed names.
SynthFiles write_corpus(const Corpus& corpus, const std::filesystem::path& dir, const CandidateNames& names);

// ---------------------------------------------------------------- oracles

/// Least squares with intercept through the normal equations (dense LU).
LinearModel ols_oracle(const Eigen::MatrixXd& X, const Eigen::VectorXd& y);

struct QpSolution {
    Eigen::VectorXd dual;
    double objective = 0.0;  // 0.5 d'Kd + eps |d|_1 - y'd, minimized
};

/// SVR dual by enumeration of every active set: each coefficient is at -C,
/// free negative, 0, free positive or +C, and every face is solved exactly
/// with its equality constraint. Rows <= 6.
QpSolution qp_oracle(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, double C, double epsilon,
                     const KernelSpec& kernel);

}  // namespace ballotwire

#pragma once

#include <array>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ballotwire/calendar.hpp"
#include "ballotwire/ingest.hpp"

namespace ballotwire {

inline constexpr std::size_t kFeatureCount = 5;

/// Machine names of the feature columns, in DailyFeatureRow::values() order.
inline constexpr std::array<std::string_view, kFeatureCount> kFeatureKeys{
    "sum_sent_likes", "sum_sent_retweets", "sum_sent_followers", "mean_likes_per_follower",
    "mean_retweets_per_follower"};

/// Per-day sums of compound x engagement over one candidate's hashtag tweets.
struct DailySums {
    Date date{};
    double sent_likes = 0.0;
    double sent_retweets = 0.0;
    double sent_followers = 0.0;
    std::size_t tweets = 0;
};

/// Per-day means of engagement ratios over one candidate's own posts.
struct DailyMeans {
    Date date{};
    double likes_per_follower = 0.0;
    double retweets_per_follower = 0.0;
    std::size_t posts = 0;
};

struct DailyFeatureRow {
    Date date{};
    double sum_sent_likes = 0.0;
    double sum_sent_retweets = 0.0;
    double sum_sent_followers = 0.0;
    double mean_likes_per_follower = 0.0;
    double mean_retweets_per_follower = 0.0;

    std::array<double, kFeatureCount> values() const {
        return {sum_sent_likes, sum_sent_retweets, sum_sent_followers, mean_likes_per_follower,
                mean_retweets_per_follower};
    }
    void set_values(const std::array<double, kFeatureCount>& v) {
        sum_sent_likes = v[0];
        sum_sent_retweets = v[1];
        sum_sent_followers = v[2];
        mean_likes_per_follower = v[3];
        mean_retweets_per_follower = v[4];
    }
};

/// One candidate's daily table: five features plus the previous day's
/// polling share (percentage points), rows contiguous and date-ascending.
struct FeatureFrame {
    Candidate candidate = Candidate::A;
    std::vector<DailyFeatureRow> rows;
    std::vector<double> prev_poll;  // parallel to rows
};

/// compound score of a tweet text
using CompoundScorer = std::function<double(std::string_view)>;

/// Days with no tweets produce no entry. Sums are compensated, so the
/// result does not depend on input order beyond rounding of the final value.
std::vector<DailySums> aggregate_hashtag_tweets(std::span<const RawTweet> tweets, const CompoundScorer& scorer);

std::vector<DailyMeans> aggregate_candidate_engagement(std::span<const CandidatePost> posts);

struct AssembleOptions {
    bool fill_engagement = false;  // carry the prior day's means over post-less days
};

/// Joins sums, means and lagged polls over `range`. prev_poll(d) = poll(d - 1).
FeatureFrame assemble_frame(std::span<const DailySums> sums, std::span<const DailyMeans> means,
                            std::span<const PollSnapshot> polls, Candidate candidate, const DateRange& range,
                            const AssembleOptions& options = {});

/// Header row of the frame CSV: Date, five features, Previous Polling Estimate.
std::vector<std::string> frame_columns(std::string_view candidate_display);

/// "biden" -> "Biden"
std::string display_name(std::string_view name);

/// Optional leading `# ...` comment lines carry provenance and are skipped on read.
void write_frame_csv(const std::filesystem::path& path, const FeatureFrame& frame,
                     std::string_view candidate_display, std::span<const std::string> comments = {});
FeatureFrame read_frame_csv(const std::filesystem::path& path, Candidate candidate);

}  // namespace ballotwire

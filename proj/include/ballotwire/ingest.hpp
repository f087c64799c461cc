#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ballotwire/calendar.hpp"

namespace ballotwire {

/// The two candidates of a head-to-head race. Display names live in
/// CandidateNames; everything internal is keyed by this enum.
enum class Candidate { A = 0, B = 1 };

inline constexpr std::array<Candidate, 2> kCandidates{Candidate::A, Candidate::B};

constexpr std::size_t index_of(Candidate c) noexcept { return static_cast<std::size_t>(c); }

struct CandidateNames {
    std::string a = "biden";
    std::string b = "trump";

    const std::string& operator[](Candidate c) const { return c == Candidate::A ? a : b; }
    std::optional<Candidate> find(std::string_view name) const;
};

/// One hashtag tweet.
struct RawTweet {
    std::uint64_t tweet_id = 0;
    Timestamp created_at{};
    std::string text;
    std::uint64_t like_count = 0;
    std::uint64_t retweet_count = 0;
    std::uint64_t author_follower_count = 0;
    Candidate candidate_tag = Candidate::A;

    bool operator==(const RawTweet&) const = default;
};

/// One tweet from a candidate's own account.
struct CandidatePost {
    std::uint64_t tweet_id = 0;
    Timestamp created_at{};
    std::uint64_t like_count = 0;
    std::uint64_t retweet_count = 0;
    std::uint64_t author_follower_count_at_capture = 0;  // > 0
    Candidate candidate = Candidate::A;

    bool operator==(const CandidatePost&) const = default;
};

/// Aggregate polling for one day, percentage points.
struct PollSnapshot {
    Date date{};
    std::array<double, 2> shares{};

    double share(Candidate c) const { return shares[index_of(c)]; }
    bool operator==(const PollSnapshot&) const = default;
};

struct Corpus {
    std::vector<RawTweet> tweets;
    std::vector<CandidatePost> posts;
    std::vector<PollSnapshot> polls;
    DateRange date_range{};
};

/// Column names; defaults follow the public hashtag-tweet export.
struct TweetSchema {
    std::string created_at = "created_at";
    std::string text = "tweet";
    std::string likes = "likes";
    std::string retweets = "retweet_count";
    std::string followers = "user_followers_count";
    std::string tweet_id = "tweet_id";
};

struct ParseOptions {
    bool strict = false;  // any dropped row becomes a MalformedRow error
};

template <class T>
struct Parsed {
    std::vector<T> records;
    std::size_t dropped = 0;
    std::vector<std::size_t> dropped_lines;
};

Parsed<RawTweet> parse_tweet_csv(const std::filesystem::path& path, Candidate candidate_tag,
                                 const TweetSchema& schema = {}, const ParseOptions& options = {});

/// The text column is optional here; zero follower counts are an error
/// rather than a drop because every downstream ratio divides by them.
Parsed<CandidatePost> parse_candidate_csv(const std::filesystem::path& path, Candidate candidate,
                                          const TweetSchema& schema = {},
                                          const ParseOptions& options = {});

/// Columns `date` plus one per candidate name. Output is date-sorted.
std::vector<PollSnapshot> parse_polling_csv(const std::filesystem::path& path,
                                            const CandidateNames& candidates);

/// Writes newline-delimited decimal IDs (tweets, then posts, first occurrence
/// wins) and returns how many were written.
std::size_t export_tweet_ids(const Corpus& corpus, const std::filesystem::path& path);

enum class FindingKind { MissingTweetDay, MissingPostDay, MissingPollDay, MissingLagAnchor };

struct Finding {
    FindingKind kind;
    Date date{};
    std::optional<Candidate> candidate;
};

struct ValidationReport {
    std::vector<Finding> findings;

    bool clean() const { return findings.empty(); }
    bool has(FindingKind kind) const;
    /// Findings that stop the pipeline given the fill flags.
    std::vector<Finding> blocking(bool fill_polls, bool fill_engagement) const;
};

ValidationReport validate_corpus(const Corpus& corpus, const DateRange& required_range);

/// Carries the last snapshot forward over missing days in [first poll, range.end].
std::vector<PollSnapshot> forward_fill_polls(const std::vector<PollSnapshot>& polls,
                                             const DateRange& range);

std::string describe(const Finding& finding, const CandidateNames& names);

// Writers emit the same schemas the parsers read.
void write_tweet_csv(const std::filesystem::path& path, const std::vector<RawTweet>& tweets,
                     const TweetSchema& schema = {});
void write_candidate_csv(const std::filesystem::path& path, const std::vector<CandidatePost>& posts,
                         const TweetSchema& schema = {});
void write_polling_csv(const std::filesystem::path& path, const std::vector<PollSnapshot>& polls,
                       const CandidateNames& candidates);

}  // namespace ballotwire

#include "ballotwire/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <unordered_set>

#include "ballotwire/csv.hpp"
#include "ballotwire/error.hpp"
#include "ballotwire/numeric.hpp"

namespace ballotwire {
namespace {

std::size_t require_column(const csv::Table& table, const std::string& name,
                           const std::filesystem::path& path) {
    auto idx = table.column(name);
    if (!idx)
        throw Error(ErrorKind::MissingColumn,
                    "missing column '" + name + "' in " + path.string());
    return *idx;
}

bool blank(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

// "YYYY-MM-DD HH:MM:SS", the export format of the public dataset.
std::string kaggle_timestamp(Timestamp t) {
    std::string iso = format_timestamp(t);
    iso[10] = ' ';
    iso.pop_back();
    return iso;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorKind::IoError, "cannot write " + path.string());
    return out;
}

template <class T>
void drop_row(Parsed<T>& result, const csv::Record& row, const ParseOptions& options,
              const std::filesystem::path& path, const char* why) {
    if (options.strict)
        throw Error(ErrorKind::MalformedRow,
                    path.string() + ":" + std::to_string(row.line) + ": " + why);
    ++result.dropped;
    result.dropped_lines.push_back(row.line);
}

}  // namespace

std::optional<Candidate> CandidateNames::find(std::string_view name) const {
    if (name == a)
        return Candidate::A;
    if (name == b)
        return Candidate::B;
    return std::nullopt;
}

Parsed<RawTweet> parse_tweet_csv(const std::filesystem::path& path, Candidate candidate_tag,
                                 const TweetSchema& schema, const ParseOptions& options) {
    const csv::Table table = csv::read_file(path);
    const std::size_t c_time = require_column(table, schema.created_at, path);
    const std::size_t c_text = require_column(table, schema.text, path);
    const std::size_t c_likes = require_column(table, schema.likes, path);
    const std::size_t c_rts = require_column(table, schema.retweets, path);
    const std::size_t c_fol = require_column(table, schema.followers, path);
    const std::size_t c_id = require_column(table, schema.tweet_id, path);
    const std::size_t width = std::max({c_time, c_text, c_likes, c_rts, c_fol, c_id}) + 1;

    Parsed<RawTweet> result;
    std::unordered_set<std::uint64_t> seen;
    for (const auto& row : table.rows) {
        if (row.fields.size() < width) {
            drop_row(result, row, options, path, "too few fields");
            continue;
        }
        auto ts = parse_timestamp(row.fields[c_time]);
        auto likes = parse_count(row.fields[c_likes]);
        auto rts = parse_count(row.fields[c_rts]);
        auto fol = parse_count(row.fields[c_fol]);
        auto id = parse_count(row.fields[c_id]);
        if (!ts || !likes || !rts || !fol || !id) {
            drop_row(result, row, options, path, "unparseable timestamp or count");
            continue;
        }
        if (blank(row.fields[c_text])) {
            drop_row(result, row, options, path, "empty text");
            continue;
        }
        if (!seen.insert(*id).second) {
            drop_row(result, row, options, path, "duplicate tweet id");
            continue;
        }
        result.records.push_back(RawTweet{*id, *ts, row.fields[c_text], *likes, *rts, *fol, candidate_tag});
    }
    return result;
}

Parsed<CandidatePost> parse_candidate_csv(const std::filesystem::path& path, Candidate candidate,
                                          const TweetSchema& schema, const ParseOptions& options) {
    const csv::Table table = csv::read_file(path);
    const std::size_t c_time = require_column(table, schema.created_at, path);
    const std::size_t c_likes = require_column(table, schema.likes, path);
    const std::size_t c_rts = require_column(table, schema.retweets, path);
    const std::size_t c_fol = require_column(table, schema.followers, path);
    const std::size_t c_id = require_column(table, schema.tweet_id, path);
    const std::size_t width = std::max({c_time, c_likes, c_rts, c_fol, c_id}) + 1;

    Parsed<CandidatePost> result;
    std::unordered_set<std::uint64_t> seen;
    for (const auto& row : table.rows) {
        if (row.fields.size() < width) {
            drop_row(result, row, options, path, "too few fields");
            continue;
        }
        auto ts = parse_timestamp(row.fields[c_time]);
        auto likes = parse_count(row.fields[c_likes]);
        auto rts = parse_count(row.fields[c_rts]);
        auto fol = parse_count(row.fields[c_fol]);
        auto id = parse_count(row.fields[c_id]);
        if (!ts || !likes || !rts || !fol || !id) {
            drop_row(result, row, options, path, "unparseable timestamp or count");
            continue;
        }
        if (*fol == 0)
            throw Error(ErrorKind::ZeroFollowers, path.string() + ":" + std::to_string(row.line) +
                                                      ": follower count is 0 (tweet " +
                                                      std::to_string(*id) + ")");
        if (!seen.insert(*id).second) {
            drop_row(result, row, options, path, "duplicate tweet id");
            continue;
        }
        result.records.push_back(CandidatePost{*id, *ts, *likes, *rts, *fol, candidate});
    }
    return result;
}

std::vector<PollSnapshot> parse_polling_csv(const std::filesystem::path& path,
                                            const CandidateNames& candidates) {
    const csv::Table table = csv::read_file(path);
    const std::size_t c_date = require_column(table, "date", path);
    std::array<std::size_t, 2> c_share{};
    for (Candidate c : kCandidates) {
        auto idx = table.column(candidates[c]);
        if (!idx)
            throw Error(ErrorKind::MissingCandidateColumn,
                        "missing candidate column '" + candidates[c] + "' in " + path.string());
        c_share[index_of(c)] = *idx;
    }

    std::vector<PollSnapshot> polls;
    for (const auto& row : table.rows) {
        const auto where = path.string() + ":" + std::to_string(row.line);
        if (row.fields.size() <= std::max({c_date, c_share[0], c_share[1]}))
            throw Error(ErrorKind::MalformedRow, where + ": too few fields");
        auto date = parse_date(row.fields[c_date]);
        if (!date)
            throw Error(ErrorKind::MalformedRow, where + ": bad date '" + row.fields[c_date] + "'");
        PollSnapshot snap{*date, {}};
        for (Candidate c : kCandidates) {
            auto v = parse_number(row.fields[c_share[index_of(c)]]);
            if (!v)
                throw Error(ErrorKind::MalformedRow, where + ": bad share for " + candidates[c]);
            if (*v < 0.0 || *v > 100.0)
                throw Error(ErrorKind::ShareOutOfRange,
                            where + ": share " + format_number(*v) + " outside [0, 100]");
            snap.shares[index_of(c)] = *v;
        }
        polls.push_back(snap);
    }
    std::stable_sort(polls.begin(), polls.end(),
                     [](const PollSnapshot& l, const PollSnapshot& r) { return l.date < r.date; });
    for (std::size_t i = 1; i < polls.size(); ++i)
        if (polls[i].date == polls[i - 1].date)
            throw Error(ErrorKind::DuplicateDate, "duplicate poll date " + format_date(polls[i].date));
    return polls;
}

std::size_t export_tweet_ids(const Corpus& corpus, const std::filesystem::path& path) {
    if (corpus.tweets.empty() && corpus.posts.empty())
        throw Error(ErrorKind::EmptyCorpus, "corpus has no tweets or posts");
    std::ofstream out = open_out(path);
    std::unordered_set<std::uint64_t> written;
    std::size_t count = 0;
    auto emit = [&](std::uint64_t id) {
        if (written.insert(id).second) {
            out << id << '\n';
            ++count;
        }
    };
    for (const auto& t : corpus.tweets)
        emit(t.tweet_id);
    for (const auto& p : corpus.posts)
        emit(p.tweet_id);
    if (!out)
        throw Error(ErrorKind::IoError, "write failed: " + path.string());
    return count;
}

bool ValidationReport::has(FindingKind kind) const {
    return std::any_of(findings.begin(), findings.end(), [&](const Finding& f) { return f.kind == kind; });
}

std::vector<Finding> ValidationReport::blocking(bool fill_polls, bool fill_engagement) const {
    std::vector<Finding> out;
    for (const auto& f : findings) {
        if (f.kind == FindingKind::MissingPollDay && fill_polls)
            continue;
        if (f.kind == FindingKind::MissingPostDay && fill_engagement)
            continue;
        out.push_back(f);
    }
    return out;
}

ValidationReport validate_corpus(const Corpus& corpus, const DateRange& range) {
    std::array<std::set<Date>, 2> tweet_days, post_days;
    for (const auto& t : corpus.tweets)
        tweet_days[index_of(t.candidate_tag)].insert(utc_day(t.created_at));
    for (const auto& p : corpus.posts)
        post_days[index_of(p.candidate)].insert(utc_day(p.created_at));
    std::set<Date> poll_days;
    for (const auto& p : corpus.polls)
        poll_days.insert(p.date);

    ValidationReport report;
    const Date anchor = range.start - std::chrono::days{1};
    if (!poll_days.contains(anchor))
        report.findings.push_back({FindingKind::MissingLagAnchor, anchor, std::nullopt});
    for (Date d = range.start; d <= range.end; d += std::chrono::days{1}) {
        for (Candidate c : kCandidates) {
            if (!tweet_days[index_of(c)].contains(d))
                report.findings.push_back({FindingKind::MissingTweetDay, d, c});
            if (!post_days[index_of(c)].contains(d))
                report.findings.push_back({FindingKind::MissingPostDay, d, c});
        }
        if (!poll_days.contains(d))
            report.findings.push_back({FindingKind::MissingPollDay, d, std::nullopt});
    }
    return report;
}

std::vector<PollSnapshot> forward_fill_polls(const std::vector<PollSnapshot>& polls,
                                             const DateRange& range) {
    if (polls.empty())
        return {};
    std::map<Date, PollSnapshot> by_day;
    for (const auto& p : polls)
        by_day.emplace(p.date, p);
    std::vector<PollSnapshot> out;
    PollSnapshot last = polls.front();
    const Date stop = std::max(range.end, polls.back().date);
    for (Date d = polls.front().date; d <= stop; d += std::chrono::days{1}) {
        if (auto it = by_day.find(d); it != by_day.end())
            last = it->second;
        out.push_back(PollSnapshot{d, last.shares});
    }
    return out;
}

std::string describe(const Finding& finding, const CandidateNames& names) {
    std::string what;
    switch (finding.kind) {
    case FindingKind::MissingTweetDay: what = "MissingTweetDay"; break;
    case FindingKind::MissingPostDay: what = "MissingPostDay"; break;
    case FindingKind::MissingPollDay: what = "MissingPollDay"; break;
    case FindingKind::MissingLagAnchor: what = "MissingLagAnchor"; break;
    }
    what += "(" + format_date(finding.date);
    if (finding.candidate)
        what += ", " + names[*finding.candidate];
    return what + ")";
}

void write_tweet_csv(const std::filesystem::path& path, const std::vector<RawTweet>& tweets,
                     const TweetSchema& schema) {
    std::ofstream out = open_out(path);
    out << csv::join_row({schema.created_at, schema.tweet_id, schema.text, schema.likes,
                          schema.retweets, schema.followers})
        << '\n';
    for (const auto& t : tweets)
        out << csv::join_row({kaggle_timestamp(t.created_at), std::to_string(t.tweet_id), t.text,
                              std::to_string(t.like_count), std::to_string(t.retweet_count),
                              std::to_string(t.author_follower_count)})
            << '\n';
}

void write_candidate_csv(const std::filesystem::path& path, const std::vector<CandidatePost>& posts,
                         const TweetSchema& schema) {
    std::ofstream out = open_out(path);
    out << csv::join_row({schema.created_at, schema.tweet_id, schema.likes, schema.retweets,
                          schema.followers})
        << '\n';
    for (const auto& p : posts)
        out << csv::join_row({kaggle_timestamp(p.created_at), std::to_string(p.tweet_id),
                              std::to_string(p.like_count), std::to_string(p.retweet_count),
                              std::to_string(p.author_follower_count_at_capture)})
            << '\n';
}

void write_polling_csv(const std::filesystem::path& path, const std::vector<PollSnapshot>& polls,
                       const CandidateNames& candidates) {
    std::ofstream out = open_out(path);
    out << csv::join_row({"date", candidates.a, candidates.b}) << '\n';
    for (const auto& p : polls)
        out << csv::join_row({format_date(p.date), format_number(p.shares[0]), format_number(p.shares[1])})
            << '\n';
}

}  // namespace ballotwire

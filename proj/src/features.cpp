#include "ballotwire/features.hpp"

#include <cctype>
#include <fstream>
#include <map>

#include "ballotwire/csv.hpp"
#include "ballotwire/error.hpp"
#include "ballotwire/numeric.hpp"

namespace ballotwire {

std::vector<DailySums> aggregate_hashtag_tweets(std::span<const RawTweet> tweets, const CompoundScorer& scorer) {
    struct Acc {
        CompensatedSum likes, retweets, followers;
        std::size_t n = 0;
    };
    std::map<Date, Acc> days;
    for (const auto& t : tweets) {
        const double compound = scorer(t.text);
        Acc& acc = days[utc_day(t.created_at)];
        acc.likes += compound * static_cast<double>(t.like_count);
        acc.retweets += compound * static_cast<double>(t.retweet_count);
        acc.followers += compound * static_cast<double>(t.author_follower_count);
        ++acc.n;
    }
    std::vector<DailySums> out;
    out.reserve(days.size());
    for (const auto& [day, acc] : days)
        out.push_back({day, acc.likes.value(), acc.retweets.value(), acc.followers.value(), acc.n});
    return out;
}

std::vector<DailyMeans> aggregate_candidate_engagement(std::span<const CandidatePost> posts) {
    struct Acc {
        CompensatedSum likes, retweets;
        std::size_t n = 0;
    };
    std::map<Date, Acc> days;
    for (const auto& p : posts) {
        if (p.author_follower_count_at_capture == 0)
            throw Error(ErrorKind::ZeroFollowers, "post " + std::to_string(p.tweet_id) + " has 0 followers");
        const auto followers = static_cast<double>(p.author_follower_count_at_capture);
        Acc& acc = days[utc_day(p.created_at)];
        acc.likes += static_cast<double>(p.like_count) / followers;
        acc.retweets += static_cast<double>(p.retweet_count) / followers;
        ++acc.n;
    }
    std::vector<DailyMeans> out;
    out.reserve(days.size());
    for (const auto& [day, acc] : days) {
        const auto n = static_cast<double>(acc.n);
        out.push_back({day, acc.likes.value() / n, acc.retweets.value() / n, acc.n});
    }
    return out;
}

FeatureFrame assemble_frame(std::span<const DailySums> sums, std::span<const DailyMeans> means,
                            std::span<const PollSnapshot> polls, Candidate candidate, const DateRange& range,
                            const AssembleOptions& options) {
    std::map<Date, const DailySums*> sum_by_day;
    for (const auto& s : sums)
        sum_by_day[s.date] = &s;
    std::map<Date, const DailyMeans*> mean_by_day;
    for (const auto& m : means)
        mean_by_day[m.date] = &m;
    std::map<Date, double> poll_by_day;
    for (const auto& p : polls)
        poll_by_day[p.date] = p.share(candidate);

    FeatureFrame frame;
    frame.candidate = candidate;
    const DailyMeans* carried = nullptr;
    for (Date d = range.start; d <= range.end; d += std::chrono::days{1}) {
        auto s = sum_by_day.find(d);
        if (s == sum_by_day.end())
            throw Error(ErrorKind::MissingFeatureDay, "no hashtag tweets on " + format_date(d));
        auto m = mean_by_day.find(d);
        const DailyMeans* mean = m == mean_by_day.end() ? nullptr : m->second;
        if (!mean) {
            if (!options.fill_engagement || !carried)
                throw Error(ErrorKind::MissingFeatureDay, "no candidate posts on " + format_date(d));
            mean = carried;
        }
        carried = mean;
        const Date prev = d - std::chrono::days{1};
        auto p = poll_by_day.find(prev);
        if (p == poll_by_day.end()) {
            if (d == range.start)
                throw Error(ErrorKind::MissingLagAnchor, "no poll on " + format_date(prev) + " (lag anchor)");
            throw Error(ErrorKind::MissingPollDay, "no poll on " + format_date(prev));
        }
        frame.rows.push_back({d, s->second->sent_likes, s->second->sent_retweets, s->second->sent_followers,
                              mean->likes_per_follower, mean->retweets_per_follower});
        frame.prev_poll.push_back(p->second);
    }
    return frame;
}

std::string display_name(std::string_view name) {
    std::string out(name);
    if (!out.empty())
        out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
    return out;
}

std::vector<std::string> frame_columns(std::string_view candidate_display) {
    const std::string who(candidate_display);
    return {"Date",
            "Sum of Sentiment*Likes",
            "Sum of Sentiment*Retweets",
            "Sum of Sentiment*Followers",
            "Mean of " + who + " Likes/Followers",
            "Mean of " + who + " Retweets/Followers",
            "Previous Polling Estimate"};
}

void write_frame_csv(const std::filesystem::path& path, const FeatureFrame& frame,
                     std::string_view candidate_display, std::span<const std::string> comments) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorKind::IoError, "cannot write " + path.string());
    for (const auto& c : comments)
        out << "# " << c << '\n';
    out << csv::join_row(frame_columns(candidate_display)) << '\n';
    for (std::size_t i = 0; i < frame.rows.size(); ++i) {
        const auto& r = frame.rows[i];
        std::vector<std::string> fields{format_date(r.date)};
        for (double v : r.values())
            fields.push_back(format_number(v));
        fields.push_back(format_number(frame.prev_poll[i]));
        out << csv::join_row(fields) << '\n';
    }
}

FeatureFrame read_frame_csv(const std::filesystem::path& path, Candidate candidate) {
    const csv::Table table = csv::read_file(path, /*skip_comment_lines=*/true);
    const auto& h = table.header.fields;
    auto starts_ends = [](const std::string& s, std::string_view pre, std::string_view post) {
        return s.size() >= pre.size() + post.size() && s.starts_with(pre) && s.ends_with(post);
    };
    const auto expected = frame_columns("*");
    if (h.size() != expected.size())
        throw Error(ErrorKind::MissingColumn, path.string() + ": expected 7 frame columns");
    for (std::size_t i : {0u, 1u, 2u, 3u, 6u})
        if (h[i] != expected[i])
            throw Error(ErrorKind::MissingColumn, path.string() + ": missing column '" + expected[i] + "'");
    if (!starts_ends(h[4], "Mean of ", " Likes/Followers"))
        throw Error(ErrorKind::MissingColumn, path.string() + ": missing column 'Mean of <candidate> Likes/Followers'");
    if (!starts_ends(h[5], "Mean of ", " Retweets/Followers"))
        throw Error(ErrorKind::MissingColumn,
                    path.string() + ": missing column 'Mean of <candidate> Retweets/Followers'");

    FeatureFrame frame;
    frame.candidate = candidate;
    for (const auto& row : table.rows) {
        const auto where = path.string() + ":" + std::to_string(row.line);
        if (row.fields.size() != 7)
            throw Error(ErrorKind::MalformedRow, where + ": expected 7 fields");
        auto date = parse_date(row.fields[0]);
        if (!date)
            throw Error(ErrorKind::MalformedRow, where + ": bad date");
        std::array<double, kFeatureCount> v{};
        for (std::size_t k = 0; k < kFeatureCount; ++k) {
            auto x = parse_number(row.fields[k + 1]);
            if (!x)
                throw Error(ErrorKind::MalformedRow, where + ": bad value in column " + h[k + 1]);
            v[k] = *x;
        }
        auto prev = parse_number(row.fields[6]);
        if (!prev)
            throw Error(ErrorKind::MalformedRow, where + ": bad previous polling estimate");
        if (!frame.rows.empty() && *date != frame.rows.back().date + std::chrono::days{1})
            throw Error(ErrorKind::MalformedRow, where + ": frame rows must be consecutive days");
        DailyFeatureRow r;
        r.date = *date;
        r.set_values(v);
        frame.rows.push_back(r);
        frame.prev_poll.push_back(*prev);
    }
    return frame;
}

}  // namespace ballotwire

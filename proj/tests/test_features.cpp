#include <map>

#include "ballotwire/error.hpp"
#include "ballotwire/features.hpp"
#include "ballotwire/supervise.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace ballotwire;
using testsupport::TempDir;

namespace {

Date day(unsigned m, unsigned d) { return Date{std::chrono::year{2020} / m / d}; }

Timestamp at(Date d, int hour) { return Timestamp{d} + std::chrono::hours{hour}; }

// compounds injected by text, so sums are checkable by hand
CompoundScorer table_scorer(std::map<std::string, double> table) {
    return [table = std::move(table)](std::string_view t) { return table.at(std::string(t)); };
}

RawTweet tweet(std::uint64_t id, Date d, std::string text, std::uint64_t likes, std::uint64_t rts,
               std::uint64_t fol) {
    return RawTweet{id, at(d, 10), std::move(text), likes, rts, fol, Candidate::A};
}

CandidatePost post(std::uint64_t id, Date d, std::uint64_t likes, std::uint64_t rts, std::uint64_t fol) {
    return CandidatePost{id, at(d, 15), likes, rts, fol, Candidate::A};
}

ErrorKind kind_of(const auto& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::InvalidArgument;
}

const std::array<std::array<double, 6>, 5> kReferenceFrame{{
    {6.075432, -0.883943, -416.643181, 0.000006, 0.000069, 51.7},
    {-11.997177, -1.605169, 6.600909, 0.000174, -0.000176, 51.2},
    {-0.532162, -0.191953, 781.941740, -0.000191, -0.000577, 51.3},
    {0.358707, 0.119817, 295.607700, 0.001870, 0.013707, 51.3},
    {0.687242, 0.297876, -1223.989339, -0.001564, -0.010134, 51.3},
}};

}  // namespace

TEST_CASE("reference frame parses to exact values") {
    const FeatureFrame f = read_frame_csv(testsupport::test_data_dir() / "reference_frame.csv", Candidate::A);
    REQUIRE(f.rows.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        CAPTURE(i);
        CHECK(f.rows[i].date == day(10, 16 + static_cast<unsigned>(i)));
        const auto v = f.rows[i].values();
        for (std::size_t k = 0; k < kFeatureCount; ++k)
            CHECK(v[k] == kReferenceFrame[i][k]);
        CHECK(f.prev_poll[i] == kReferenceFrame[i][5]);
    }
    CHECK(f.rows[0].sum_sent_likes == 6.075432);
    CHECK(f.rows[0].sum_sent_followers == -416.643181);
}

TEST_CASE("reference frame becomes a 5x6 supervised set with the lag last") {
    const FeatureFrame f = read_frame_csv(testsupport::test_data_dir() / "reference_frame.csv", Candidate::A);
    // targets: each day's poll is the next row's previous estimate; the last is assumed flat
    std::vector<PollSnapshot> polls;
    for (unsigned d = 15; d <= 20; ++d) {
        const double share = d < 20 ? kReferenceFrame[d - 15][5] : 51.3;
        polls.push_back(PollSnapshot{day(10, d), {share, 100.0 - share}});
    }
    const SupervisedSet s = make_sliding_window(f, polls);
    CHECK(s.X.rows() == 5);
    CHECK(s.X.cols() == 6);
    CHECK(s.X(0, 5) == 51.7);
    for (Eigen::Index i = 0; i < 5; ++i)
        CHECK(s.X(i, 5) == kReferenceFrame[static_cast<std::size_t>(i)][5]);
    CHECK(s.X(0, 0) == 6.075432);
    CHECK(s.y(0) == 51.2);
    CHECK(s.dates.front() == day(10, 16));
}

TEST_CASE("frame csv round trip keeps every bit") {
    TempDir dir;
    FeatureFrame f = read_frame_csv(testsupport::test_data_dir() / "reference_frame.csv", Candidate::B);
    f.rows[2].sum_sent_likes = 0.1 + 0.2;  // needs 17 significant digits
    const std::vector<std::string> comments{"config_hash: abc", "columns: x"};
    write_frame_csv(dir.path() / "f.csv", f, "Trump", comments);
    const std::string text = testsupport::slurp(dir.path() / "f.csv");
    CHECK(text.starts_with("# config_hash: abc\n# columns: x\nDate,Sum of Sentiment*Likes"));
    CHECK(text.find("Mean of Trump Likes/Followers") != std::string::npos);
    const FeatureFrame g = read_frame_csv(dir.path() / "f.csv", Candidate::B);
    REQUIRE(g.rows.size() == f.rows.size());
    for (std::size_t i = 0; i < f.rows.size(); ++i) {
        CHECK(g.rows[i].values() == f.rows[i].values());
        CHECK(g.prev_poll[i] == f.prev_poll[i]);
    }
}

TEST_CASE("frame csv rejects wrong headers and gaps") {
    TempDir dir;
    const auto bad = dir.write("bad.csv", "Date,a,b,c,d,e,f\n2020-10-16,1,2,3,4,5,6\n");
    CHECK(kind_of([&] { read_frame_csv(bad, Candidate::A); }) == ErrorKind::MissingColumn);
    const std::string header =
        "Date,Sum of Sentiment*Likes,Sum of Sentiment*Retweets,Sum of Sentiment*Followers,"
        "Mean of X Likes/Followers,Mean of X Retweets/Followers,Previous Polling Estimate\n";
    const auto gap = dir.write("gap.csv", header + "2020-10-16,1,2,3,4,5,6\n2020-10-18,1,2,3,4,5,6\n");
    CHECK(kind_of([&] { read_frame_csv(gap, Candidate::A); }) == ErrorKind::MalformedRow);
}

TEST_CASE("hashtag sums weight engagement by compound") {
    const std::vector<RawTweet> two{tweet(1, day(10, 16), "up", 10, 0, 0), tweet(2, day(10, 16), "down", 4, 0, 0)};
    const auto sums = aggregate_hashtag_tweets(two, table_scorer({{"up", 0.5}, {"down", -0.5}}));
    REQUIRE(sums.size() == 1);
    CHECK(sums[0].sent_likes == 3.0);
    CHECK(sums[0].tweets == 2);

    const std::vector<RawTweet> flat{tweet(1, day(10, 16), "meh", 10, 5, 100), tweet(2, day(10, 16), "meh", 3, 2, 1)};
    const auto zero = aggregate_hashtag_tweets(flat, table_scorer({{"meh", 0.0}}));
    CHECK(zero[0].sent_likes == 0.0);
    CHECK(zero[0].sent_retweets == 0.0);
    CHECK(zero[0].sent_followers == 0.0);
}

TEST_CASE("six tweets over two days match the hand sums") {
    const auto scorer =
        table_scorer({{"a", 0.5}, {"b", -0.25}, {"c", 0.0}, {"d", 0.8}, {"e", -0.6}, {"f", 0.1}});
    const std::vector<RawTweet> tweets{
        tweet(1, day(10, 17), "d", 5, 0, 1000), tweet(2, day(10, 16), "a", 10, 2, 100),
        tweet(3, day(10, 16), "b", 4, 8, 400),  tweet(4, day(10, 17), "e", 10, 5, 50),
        tweet(5, day(10, 16), "c", 7, 7, 7),    tweet(6, day(10, 17), "f", 20, 10, 300),
    };
    const auto sums = aggregate_hashtag_tweets(tweets, scorer);
    REQUIRE(sums.size() == 2);
    CHECK(sums[0].date == day(10, 16));
    CHECK(sums[0].sent_likes == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(sums[0].sent_retweets == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(sums[0].sent_followers == doctest::Approx(-50.0).epsilon(1e-12));
    CHECK(sums[1].date == day(10, 17));
    CHECK(std::abs(sums[1].sent_likes) < 1e-12);
    CHECK(sums[1].sent_retweets == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(sums[1].sent_followers == doctest::Approx(800.0).epsilon(1e-12));
    CHECK(sums[1].tweets == 3);
}

TEST_CASE("engagement means over candidate posts") {
    const std::vector<CandidatePost> one{post(1, day(10, 16), 2000, 0, 1'000'000)};
    CHECK(aggregate_candidate_engagement(one)[0].likes_per_follower == doctest::Approx(0.002).epsilon(1e-15));

    const std::vector<CandidatePost> pair{post(1, day(10, 16), 1, 0, 1000), post(2, day(10, 16), 3, 0, 1000)};
    CHECK(aggregate_candidate_engagement(pair)[0].likes_per_follower == doctest::Approx(0.002).epsilon(1e-15));

    const std::vector<CandidatePost> five{
        post(1, day(10, 16), 2000, 100, 1'000'000), post(2, day(10, 16), 1000, 300, 500'000),
        post(3, day(10, 17), 300, 30, 100'000),     post(4, day(10, 17), 100, 10, 100'000),
        post(5, day(10, 17), 50, 0, 10'000),
    };
    const auto means = aggregate_candidate_engagement(five);
    REQUIRE(means.size() == 2);
    CHECK(means[0].likes_per_follower == doctest::Approx(0.002).epsilon(1e-14));
    CHECK(means[0].retweets_per_follower == doctest::Approx(0.00035).epsilon(1e-14));
    CHECK(means[1].likes_per_follower == doctest::Approx(0.003).epsilon(1e-14));
    CHECK(means[1].retweets_per_follower == doctest::Approx(0.0004 / 3.0).epsilon(1e-14));
    CHECK(means[1].posts == 3);

    std::vector<CandidatePost> zero{post(1, day(10, 16), 1, 1, 0)};
    CHECK(kind_of([&] { aggregate_candidate_engagement(zero); }) == ErrorKind::ZeroFollowers);
}

TEST_CASE("summation does not depend on tweet order") {
    std::vector<RawTweet> tweets;
    std::map<std::string, double> table;
    for (int i = 0; i < 300; ++i) {
        const std::string t = "t" + std::to_string(i);
        table[t] = ((i * 37) % 201 - 100) / 100.0;
        tweets.push_back(tweet(static_cast<std::uint64_t>(i), day(10, 16), t, static_cast<std::uint64_t>(i * 13 % 97),
                               static_cast<std::uint64_t>(i % 7), static_cast<std::uint64_t>(1 + i * 1009 % 100000)));
    }
    const auto scorer = table_scorer(table);
    const auto forward = aggregate_hashtag_tweets(tweets, scorer);
    std::reverse(tweets.begin(), tweets.end());
    const auto backward = aggregate_hashtag_tweets(tweets, scorer);
    CHECK(std::abs(forward[0].sent_followers - backward[0].sent_followers) <=
          1e-12 * std::max(1.0, std::abs(forward[0].sent_followers)));
}

TEST_CASE("assemble joins sums, means and the lagged poll") {
    const std::vector<DailySums> sums{{day(10, 16), 1.0, 2.0, 3.0, 4}, {day(10, 17), 5.0, 6.0, 7.0, 4}};
    const std::vector<DailyMeans> means{{day(10, 16), 0.1, 0.2, 1}};
    const std::vector<PollSnapshot> polls{{day(10, 15), {51.7, 42.0}}, {day(10, 16), {51.2, 42.5}}};

    const FeatureFrame one = assemble_frame(sums, means, polls, Candidate::A, {day(10, 16), day(10, 16)});
    REQUIRE(one.rows.size() == 1);
    CHECK(one.rows[0].values() == std::array<double, 5>{1.0, 2.0, 3.0, 0.1, 0.2});
    CHECK(one.prev_poll[0] == 51.7);
    const FeatureFrame b = assemble_frame(sums, means, polls, Candidate::B, {day(10, 16), day(10, 16)});
    CHECK(b.prev_poll[0] == 42.0);

    const DateRange two{day(10, 16), day(10, 17)};
    CHECK(kind_of([&] { assemble_frame(sums, means, polls, Candidate::A, two); }) == ErrorKind::MissingFeatureDay);
    const FeatureFrame filled = assemble_frame(sums, means, polls, Candidate::A, two, AssembleOptions{true});
    REQUIRE(filled.rows.size() == 2);
    CHECK(filled.rows[1].mean_likes_per_follower == 0.1);
    CHECK(filled.prev_poll[1] == 51.2);

    const DateRange three{day(10, 16), day(10, 18)};
    CHECK(kind_of([&] { assemble_frame(sums, means, polls, Candidate::A, three, AssembleOptions{true}); }) ==
          ErrorKind::MissingFeatureDay);
    const std::vector<PollSnapshot> no_anchor{{day(10, 16), {51.2, 42.5}}};
    CHECK(kind_of([&] {
              assemble_frame(sums, means, no_anchor, Candidate::A, {day(10, 16), day(10, 16)});
          }) == ErrorKind::MissingLagAnchor);
}

TEST_CASE("display names and column headers") {
    CHECK(display_name("biden") == "Biden");
    const auto cols = frame_columns("Biden");
    REQUIRE(cols.size() == 7);
    CHECK(cols[4] == "Mean of Biden Likes/Followers");
    CHECK(cols[6] == "Previous Polling Estimate");
}

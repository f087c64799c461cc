#include "ballotwire/error.hpp"
#include "ballotwire/models.hpp"
#include "ballotwire/rng.hpp"
#include "ballotwire/supervise.hpp"
#include "doctest.h"

using namespace ballotwire;

namespace {

Date day0() { return Date{std::chrono::year{2020} / 10 / 15}; }

struct Fixture {
    FeatureFrame frame;
    std::vector<PollSnapshot> polls;
};

// n rows starting 10-16; polls cover 10-15 .. end
Fixture make_fixture(std::size_t n, std::uint64_t seed = 1) {
    Xoshiro256 rng(seed);
    Fixture fx;
    double p = 50.0;
    fx.polls.push_back({day0(), {p, 100.0 - p}});
    for (std::size_t i = 0; i < n; ++i) {
        const Date d = day0() + std::chrono::days{static_cast<int>(i) + 1};
        DailyFeatureRow r;
        r.date = d;
        std::array<double, kFeatureCount> v{};
        for (auto& x : v)
            x = rng.normal();
        r.set_values(v);
        fx.frame.rows.push_back(r);
        fx.frame.prev_poll.push_back(p);
        p = 20.0 + 0.6 * p + 0.3 * rng.normal();
        fx.polls.push_back({d, {p, 100.0 - p}});
    }
    return fx;
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

}  // namespace

TEST_CASE("sliding window pairs features with the previous poll") {
    const Fixture fx = make_fixture(19);
    const SupervisedSet s = make_sliding_window(fx.frame, fx.polls);
    REQUIRE(s.size() == 19);
    CHECK(s.X.cols() == static_cast<Eigen::Index>(kInputCount));
    for (std::size_t i = 0; i < 19; ++i) {
        const auto ei = static_cast<Eigen::Index>(i);
        CHECK(s.X(ei, 5) == fx.polls[i].share(Candidate::A));
        CHECK(s.y(ei) == fx.polls[i + 1].share(Candidate::A));
        CHECK(s.level[i] == s.y(ei));
    }
    CHECK(kInputColumns[5] == "prev_poll");
}

TEST_CASE("difference targets subtract yesterday's poll") {
    const Fixture fx = make_fixture(6);
    const SupervisedSet s = make_sliding_window(fx.frame, fx.polls, TargetMode::Difference);
    for (std::size_t i = 0; i < 6; ++i)
        CHECK(s.y(static_cast<Eigen::Index>(i)) ==
              fx.polls[i + 1].share(Candidate::A) - fx.polls[i].share(Candidate::A));
    CHECK(s.level.back() == fx.polls.back().share(Candidate::A));
}

TEST_CASE("sliding window edge cases") {
    const Fixture one = make_fixture(1);
    CHECK(make_sliding_window(one.frame, one.polls).size() == 1);

    Fixture missing = make_fixture(4);
    missing.polls.pop_back();
    CHECK(kind_of([&] { make_sliding_window(missing.frame, missing.polls); }) == ErrorKind::MissingTarget);
}

TEST_CASE("split sizes follow the protocol") {
    const Fixture fx = make_fixture(19);
    const SupervisedSet s = make_sliding_window(fx.frame, fx.polls);
    const SplitSets parts = split(s, SplitSpec{12, 3, 4});
    CHECK(parts.train.size() == 12);
    CHECK(parts.val.size() == 3);
    CHECK(parts.test.size() == 4);
    CHECK(parts.val.dates.front() == s.dates[12]);
    CHECK(parts.test.dates.back() == s.dates.back());
    CHECK(concat(parts.train, parts.val).size() == 15);
    CHECK(kind_of([&] { split(s, SplitSpec{12, 3, 5}); }) == ErrorKind::SpecMismatch);

    const Fixture three = make_fixture(3);
    const SplitSets singles = split(make_sliding_window(three.frame, three.polls), SplitSpec{1, 1, 1});
    CHECK(singles.train.dates[0] < singles.val.dates[0]);
    CHECK(singles.val.dates[0] < singles.test.dates[0]);
}

TEST_CASE("recursive forecast feeds predictions back as the lag") {
    const Eigen::MatrixXd feats = Eigen::MatrixXd::Random(4, kFeatureCount);
    const auto identity = [](const Eigen::RowVectorXd& x) { return x(kFeatureCount); };
    CHECK(recursive_forecast(identity, feats, 51.3) == std::vector<double>{51.3, 51.3, 51.3, 51.3});
    const auto plus_one = [](const Eigen::RowVectorXd& x) { return x(kFeatureCount) + 1.0; };
    CHECK(recursive_forecast(plus_one, feats, 50.0) == std::vector<double>{51, 52, 53, 54});
    CHECK(kind_of([&] { recursive_forecast(identity, Eigen::MatrixXd::Zero(2, 6), 0.0); }) ==
          ErrorKind::DimensionMismatch);
}

TEST_CASE("recursive forecast of a fitted model matches a hand loop") {
    const Fixture fx = make_fixture(19, 4);
    const SupervisedSet s = make_sliding_window(fx.frame, fx.polls);
    const SplitSets parts = split(s, SplitSpec{15, 1, 3});
    const LinearModel m = fit_ridge(parts.train.X, parts.train.y, 0.5);
    const auto pred = recursive_forecast(
        [&m](const Eigen::RowVectorXd& x) { return m.intercept + x.dot(m.weights); }, feature_block(parts.test),
        parts.val.y(0));

    double lag = parts.val.y(0);
    for (Eigen::Index d = 0; d < 3; ++d) {
        double v = m.intercept;
        for (Eigen::Index k = 0; k < 5; ++k)
            v += m.weights(k) * parts.test.X(d, k);
        v += m.weights(5) * lag;
        CHECK(pred[static_cast<std::size_t>(d)] == doctest::Approx(v).epsilon(1e-14));
        lag = v;
    }
}

TEST_CASE("to_levels integrates differences from the last level") {
    const std::vector<double> d{0.5, -0.25, 1.0};
    CHECK(to_levels(d, TargetMode::Level, 50.0) == d);
    CHECK(to_levels(d, TargetMode::Difference, 50.0) == std::vector<double>{50.5, 50.25, 51.25});
}

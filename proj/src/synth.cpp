#include "ballotwire/synth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ballotwire/error.hpp"
#include "ballotwire/rng.hpp"

namespace ballotwire {
namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr std::uint64_t kFirstTweetId = 1'316'000'000'000'000'000ULL;

// Filler around the sentiment word; none of these tokens carries valence.
constexpr std::array<const char*, 4> kTemplates{"{w} #{N}", "#{N} {w}", "{w} news about #{N} tonight",
                                                "watching #{N} {w}"};

std::string fill(std::string_view tpl, std::string_view word, std::string_view tag) {
    std::string out;
    for (std::size_t i = 0; i < tpl.size(); ++i) {
        if (tpl.substr(i, 3) == "{w}") {
            out += word;
            i += 2;
        } else if (tpl.substr(i, 3) == "{N}") {
            out += tag;
            i += 2;
        } else {
            out.push_back(tpl[i]);
        }
    }
    return out;
}

std::uint64_t floor_count(double v) {
    if (!(v > 0.0))
        return 0;
    return static_cast<std::uint64_t>(std::min(std::floor(v), 1e15));
}

std::vector<std::array<double, 2>> poll_path(const SynthSpec& spec, Xoshiro256& rng) {
    const int len = spec.n_days + 1;
    std::vector<std::array<double, 2>> shares(static_cast<std::size_t>(len));
    for (std::size_t c = 0; c < 2; ++c) {
        double p = spec.drift[c] / (1.0 - spec.ar_phi);
        for (int t = 0; t < len; ++t) {
            const double shock = spec.noise_sigma * rng.normal();
            if (spec.regime == SynthRegime::RandomWalk)
                p = p + shock;
            else
                p = spec.drift[c] + spec.ar_phi * p + shock;
            shares[static_cast<std::size_t>(t)][c] = std::clamp(p, 0.0, 100.0);
        }
    }
    return shares;
}

}  // namespace

void SynthSpec::validate() const {
    auto bad = [](const std::string& what) { throw Error(ErrorKind::InvalidArgument, "synth: " + what); };
    if (n_days < 1)
        bad("n_days must be >= 1");
    if (tweets_per_day < 1)
        bad("tweets_per_day must be >= 1");
    if (posts_per_day < 1)
        bad("posts_per_day must be >= 1");
    if (!(std::fabs(ar_phi) < 1.0))
        bad("ar_phi must lie in (-1, 1)");
    if (!(noise_sigma >= 0.0))
        bad("noise_sigma must be >= 0");
    if (candidate_followers[0] == 0 || candidate_followers[1] == 0)
        bad("candidate follower counts must be > 0");
}

DateRange SynthSpec::tweet_days() const { return {start, start + std::chrono::days{n_days - 1}}; }

std::vector<PollSnapshot> gen_polling(const SynthSpec& spec) {
    spec.validate();
    Xoshiro256 rng(spec.seed);
    const auto shares = poll_path(spec, rng);
    std::vector<PollSnapshot> out;
    for (std::size_t t = 0; t < shares.size(); ++t)
        out.push_back({spec.start - std::chrono::days{1} + std::chrono::days{static_cast<int>(t)}, shares[t]});
    return out;
}

Corpus gen_corpus(const SynthSpec& spec) {
    spec.validate();
    Xoshiro256 rng(spec.seed);
    const auto shares = poll_path(spec, rng);

    Corpus corpus;
    for (std::size_t t = 0; t < shares.size(); ++t)
        corpus.polls.push_back(
            {spec.start - std::chrono::days{1} + std::chrono::days{static_cast<int>(t)}, shares[t]});
    corpus.date_range = spec.tweet_days();

    const std::array<const char*, 2> tags{"Biden", "Trump"};
    std::uint64_t next_id = kFirstTweetId;
    // random-walk regime state: tweet mood and log engagement scale per candidate
    std::array<double, 2> mood{0.0, 0.0};
    std::array<double, 2> log_scale{0.0, 0.0};
    for (int d = 0; d < spec.n_days; ++d) {
        const Date day = spec.start + std::chrono::days{d};
        for (std::size_t c = 0; c < 2; ++c) {
            const auto cand = static_cast<Candidate>(c);
            double p_pos = 0.5;
            if (spec.regime == SynthRegime::RandomWalk) {
                mood[c] += 0.15 * rng.normal();
                log_scale[c] += 0.5 * rng.normal();
                p_pos += mood[c];
            } else {
                const double dpoll = shares[static_cast<std::size_t>(d) + 1][c] - shares[static_cast<std::size_t>(d)][c];
                p_pos += spec.sentiment_link * dpoll / 2.0;
            }
            p_pos = std::clamp(p_pos, 0.05, 0.95);
            const double scale = std::exp(log_scale[c]);

            for (int k = 0; k < spec.tweets_per_day; ++k) {
                RawTweet t;
                t.tweet_id = next_id++;
                t.created_at = std::chrono::time_point_cast<std::chrono::seconds>(day) +
                               std::chrono::seconds{rng.uniform_int(0, 86399)};
                const bool positive = rng.uniform() < p_pos;
                const auto& pair = kSynthWords[static_cast<std::size_t>(rng.uniform_int(0, 3))];
                const char* tpl = kTemplates[static_cast<std::size_t>(rng.uniform_int(0, 3))];
                t.text = fill(tpl, pair[positive ? 0 : 1], tags[c]);
                t.like_count = floor_count(scale * std::exp(std::log(20.0) + 1.2 * rng.normal()));
                t.retweet_count = floor_count(static_cast<double>(t.like_count) * 0.5 * rng.uniform());
                t.author_follower_count = floor_count(std::exp(std::log(800.0) + 1.5 * rng.normal()));
                t.candidate_tag = cand;
                corpus.tweets.push_back(std::move(t));
            }
            for (int k = 0; k < spec.posts_per_day; ++k) {
                CandidatePost p;
                p.tweet_id = next_id++;
                p.created_at = std::chrono::time_point_cast<std::chrono::seconds>(day) +
                               std::chrono::seconds{rng.uniform_int(0, 86399)};
                p.like_count = floor_count(scale * std::exp(std::log(50'000.0) + 0.5 * rng.normal()));
                p.retweet_count = floor_count(static_cast<double>(p.like_count) * (0.1 + 0.2 * rng.uniform()));
                p.author_follower_count_at_capture = spec.candidate_followers[c];
                p.candidate = cand;
                corpus.posts.push_back(p);
            }
        }
    }
    return corpus;
}

SynthFiles write_corpus(const Corpus& corpus, const std::filesystem::path& dir, const CandidateNames& names) {
    std::filesystem::create_directories(dir);
    SynthFiles files;
    for (Candidate c : kCandidates) {
        const auto i = index_of(c);
        files.tweets[i] = dir / ("tweets_" + names[c] + ".csv");
        files.posts[i] = dir / ("posts_" + names[c] + ".csv");
        std::vector<RawTweet> tweets;
        std::copy_if(corpus.tweets.begin(), corpus.tweets.end(), std::back_inserter(tweets),
                     [c](const RawTweet& t) { return t.candidate_tag == c; });
        std::vector<CandidatePost> posts;
        std::copy_if(corpus.posts.begin(), corpus.posts.end(), std::back_inserter(posts),
                     [c](const CandidatePost& p) { return p.candidate == c; });
        write_tweet_csv(files.tweets[i], tweets);
        write_candidate_csv(files.posts[i], posts);
    }
    files.polls = dir / "polls.csv";
    write_polling_csv(files.polls, corpus.polls, names);
    return files;
}

LinearModel ols_oracle(const MatrixXd& X, const VectorXd& y) {
    if (X.rows() != y.size())
        throw Error(ErrorKind::DimensionMismatch, "X and y differ in length");
    MatrixXd A(X.rows(), X.cols() + 1);
    A << X, VectorXd::Ones(X.rows());
    const MatrixXd normal = A.transpose() * A;
    Eigen::FullPivLU<MatrixXd> lu(normal);
    if (lu.rank() < normal.cols())
        throw Error(ErrorKind::SingularSystem, "design is rank deficient");
    const VectorXd beta = lu.solve(A.transpose() * y);
    LinearModel m;
    m.weights = beta.head(X.cols());
    m.intercept = beta(X.cols());
    return m;
}

QpSolution qp_oracle(const MatrixXd& X, const VectorXd& y, double C, double epsilon, const KernelSpec& kernel) {
    const Index n = X.rows();
    if (n > 6)
        throw Error(ErrorKind::TooLarge, "qp_oracle enumerates 5^n faces; n <= 6");
    if (n != y.size())
        throw Error(ErrorKind::DimensionMismatch, "X and y differ in length");
    const MatrixXd K = kernel_matrix(kernel, X, X);
    const double feas_tol = 1e-9 * std::max(1.0, C);

    QpSolution best;
    best.objective = std::numeric_limits<double>::infinity();
    long faces = 1;
    for (Index i = 0; i < n; ++i)
        faces *= 5;
    for (long f = 0; f < faces; ++f) {
        long code = f;
        std::vector<Index> free;
        VectorXd d = VectorXd::Zero(n);
        VectorXd sign = VectorXd::Zero(n);
        for (Index i = 0; i < n; ++i) {
            const int s = static_cast<int>(code % 5);  // -C, free-, 0, free+, +C
            code /= 5;
            if (s == 0)
                d(i) = -C;
            else if (s == 4)
                d(i) = C;
            else if (s == 1 || s == 3)
                free.push_back(i);
            sign(i) = s < 2 ? -1.0 : (s > 2 ? 1.0 : 0.0);
        }
        const auto m = static_cast<Index>(free.size());
        if (m > 0) {
            // K_FF d_F + nu 1 = y_F - eps s_F - K_FB d_B ; 1'd_F = -1'd_B
            MatrixXd A = MatrixXd::Zero(m + 1, m + 1);
            VectorXd rhs(m + 1);
            const VectorXd Kd_bound = K * d;
            for (Index a = 0; a < m; ++a) {
                for (Index b = 0; b < m; ++b)
                    A(a, b) = K(free[a], free[b]);
                A(a, m) = 1.0;
                A(m, a) = 1.0;
                rhs(a) = y(free[a]) - epsilon * sign(free[a]) - Kd_bound(free[a]);
            }
            rhs(m) = -d.sum();
            Eigen::FullPivLU<MatrixXd> lu(A);
            if (!lu.isInvertible())
                continue;
            const VectorXd sol = lu.solve(rhs);
            bool ok = true;
            for (Index a = 0; a < m && ok; ++a) {
                const double v = sol(a);
                ok = sign(free[a]) * v >= -feas_tol && std::fabs(v) <= C + feas_tol;
                d(free[a]) = v;
            }
            if (!ok)
                continue;
        } else if (std::fabs(d.sum()) > feas_tol) {
            continue;
        }
        const double obj = svr_dual_objective(K, y, d, epsilon);
        if (obj < best.objective) {
            best.objective = obj;
            best.dual = d;
        }
    }
    return best;
}

}  // namespace ballotwire

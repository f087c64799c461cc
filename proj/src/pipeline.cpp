#include "ballotwire/pipeline.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "ballotwire/error.hpp"
#include "ballotwire/numeric.hpp"
#include "json.hpp"

#ifndef BALLOTWIRE_DEFAULT_DATA_DIR
#define BALLOTWIRE_DEFAULT_DATA_DIR "data"
#endif

namespace ballotwire {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void config_error(const std::string& msg) { throw Error(ErrorKind::ConfigError, msg); }

template <class T>
T get_as(const json& j, const std::string& key) {
    try {
        return j.get<T>();
    } catch (const json::exception&) {
        config_error("config key '" + key + "' has the wrong type");
    }
}

ConfigPath make_path(const json& j, const std::string& key, const fs::path& base) {
    ConfigPath p;
    p.raw = get_as<std::string>(j, key);
    if (p.raw.empty())
        config_error("config key '" + key + "' is empty");
    const fs::path raw(p.raw);
    p.resolved = raw.is_absolute() ? raw : (base / raw).lexically_normal();
    return p;
}

Date get_date(const json& j, const std::string& key) {
    const auto d = parse_date(get_as<std::string>(j, key));
    if (!d)
        config_error("config key '" + key + "' is not a YYYY-MM-DD date");
    return *d;
}

std::size_t get_positive(const json& j, const std::string& key) {
    const auto v = get_as<long long>(j, key);
    if (v <= 0)
        config_error("config key '" + key + "' must be positive");
    return static_cast<std::size_t>(v);
}

const std::set<std::string>& known_keys() {
    static const std::set<std::string> keys{
        "candidate_a", "candidate_b", "tweets_a", "tweets_b", "posts_a", "posts_b", "polls", "lexicon",
        "emoji_lexicon", "start", "end", "n_train", "n_val", "n_test", "alpha", "fill_polls", "fill_engagement",
        "standardize", "difference_all", "strict", "out_dir", "seed", "lasso_lambda", "elastic_net_lambda",
        "elastic_net_mix", "ridge_lambda", "svr_c", "svr_epsilon", "svr_gamma", "cd_tol", "cd_max_iter", "models",
        "actual_share_a", "actual_share_b", "column_created_at", "column_text", "column_likes", "column_retweets",
        "column_followers", "column_tweet_id"};
    return keys;
}

// Everything but out_dir, keyed as in the config file.
json config_object(const PipelineConfig& c, bool with_out_dir) {
    json j;
    j["candidate_a"] = c.names.a;
    j["candidate_b"] = c.names.b;
    j["tweets_a"] = c.tweets[0].raw;
    j["tweets_b"] = c.tweets[1].raw;
    j["posts_a"] = c.posts[0].raw;
    j["posts_b"] = c.posts[1].raw;
    j["polls"] = c.polls.raw;
    j["lexicon"] = c.lexicon ? c.lexicon->raw : "builtin";
    j["emoji_lexicon"] = c.emoji_lexicon ? c.emoji_lexicon->raw : "builtin";
    j["start"] = format_date(c.range.start);
    j["end"] = format_date(c.range.end);
    j["n_train"] = c.split.n_train;
    j["n_val"] = c.split.n_val;
    j["n_test"] = c.split.n_test;
    j["alpha"] = c.alpha;
    j["fill_polls"] = c.fill_polls;
    j["fill_engagement"] = c.fill_engagement;
    j["standardize"] = c.standardize;
    j["difference_all"] = c.difference_all;
    j["strict"] = c.strict;
    j["seed"] = c.seed;
    j["lasso_lambda"] = c.lasso_lambda;
    j["elastic_net_lambda"] = c.elastic_net_lambda;
    j["elastic_net_mix"] = c.elastic_net_mix;
    j["ridge_lambda"] = c.ridge_lambda;
    j["svr_c"] = c.svr_c;
    j["svr_epsilon"] = c.svr_epsilon;
    j["svr_gamma"] = c.svr_gamma ? json(*c.svr_gamma) : json(nullptr);
    j["cd_tol"] = c.cd_tol;
    j["cd_max_iter"] = c.cd_max_iter;
    json models = json::array();
    for (const auto& spec : model_specs(c))
        models.push_back(spec.name());
    j["models"] = models;
    j["actual_share_a"] = c.actual_share[0] ? json(*c.actual_share[0]) : json(nullptr);
    j["actual_share_b"] = c.actual_share[1] ? json(*c.actual_share[1]) : json(nullptr);
    j["column_created_at"] = c.schema.created_at;
    j["column_text"] = c.schema.text;
    j["column_likes"] = c.schema.likes;
    j["column_retweets"] = c.schema.retweets;
    j["column_followers"] = c.schema.followers;
    j["column_tweet_id"] = c.schema.tweet_id;
    if (with_out_dir)
        j["out_dir"] = c.out_dir.string();
    return j;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::ConfigError, "cannot read config " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void require_file(const fs::path& path, std::string_view what) {
    if (!fs::is_regular_file(path))
        config_error(std::string(what) + " not found: " + path.string());
}

ErrorKind finding_error(FindingKind k) {
    switch (k) {
    case FindingKind::MissingLagAnchor: return ErrorKind::MissingLagAnchor;
    case FindingKind::MissingPollDay: return ErrorKind::MissingPollDay;
    case FindingKind::MissingTweetDay:
    case FindingKind::MissingPostDay: break;
    }
    return ErrorKind::MissingFeatureDay;
}

std::string columns_line() {
    std::string s;
    for (const auto& col : input_columns())
        s += (s.empty() ? "" : ",") + col;
    return s;
}

template <class T, class Pred>
std::size_t erase_outside(std::vector<T>& v, Pred keep) {
    const auto before = v.size();
    std::erase_if(v, [&](const T& x) { return !keep(x); });
    return before - v.size();
}

}  // namespace

// ---------------------------------------------------------------- config

void PipelineConfig::validate() const {
    if (names.a.empty() || names.b.empty() || names.a == names.b)
        config_error("candidate names must be distinct and non-empty");
    if (range.end < range.start)
        config_error("end date precedes start date");
    if (split.n_train == 0 || split.n_val == 0 || split.n_test == 0)
        config_error("split sizes must be positive");
    if (!(alpha > 0.0 && alpha < 1.0))
        config_error("alpha must lie in (0, 1)");
    for (const auto& s : actual_share)
        if (s && !(*s >= 0.0 && *s <= 100.0))
            config_error("actual shares must lie in [0, 100]");
    if (actual_share[0].has_value() != actual_share[1].has_value())
        config_error("actual shares must be given for both candidates or neither");
    try {
        for (const auto& spec : model_specs(*this))
            spec.validate();
    } catch (const Error& e) {
        config_error(e.what());
    }
}

PipelineConfig parse_config(std::string_view text, const fs::path& base_dir) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        config_error(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        config_error("config must be a JSON object");
    for (const auto& [key, _] : j.items())
        if (!known_keys().contains(key))
            config_error("unknown config key '" + key + "'");

    PipelineConfig c;
    auto has = [&](const char* key) { return j.contains(key) && !j[key].is_null(); };
    auto require = [&](const char* key) -> const json& {
        if (!has(key))
            config_error(std::string("config key '") + key + "' is required");
        return j[key];
    };

    if (has("candidate_a"))
        c.names.a = get_as<std::string>(j["candidate_a"], "candidate_a");
    if (has("candidate_b"))
        c.names.b = get_as<std::string>(j["candidate_b"], "candidate_b");
    c.tweets[0] = make_path(require("tweets_a"), "tweets_a", base_dir);
    c.tweets[1] = make_path(require("tweets_b"), "tweets_b", base_dir);
    c.posts[0] = make_path(require("posts_a"), "posts_a", base_dir);
    c.posts[1] = make_path(require("posts_b"), "posts_b", base_dir);
    c.polls = make_path(require("polls"), "polls", base_dir);
    if (has("lexicon") && j["lexicon"] != "builtin")
        c.lexicon = make_path(j["lexicon"], "lexicon", base_dir);
    if (has("emoji_lexicon") && j["emoji_lexicon"] != "builtin")
        c.emoji_lexicon = make_path(j["emoji_lexicon"], "emoji_lexicon", base_dir);
    c.range.start = get_date(require("start"), "start");
    c.range.end = get_date(require("end"), "end");
    if (has("n_train"))
        c.split.n_train = get_positive(j["n_train"], "n_train");
    if (has("n_val"))
        c.split.n_val = get_positive(j["n_val"], "n_val");
    if (has("n_test"))
        c.split.n_test = get_positive(j["n_test"], "n_test");

    auto number = [&](const char* key, double& out) {
        if (has(key))
            out = get_as<double>(j[key], key);
    };
    auto flag = [&](const char* key, bool& out) {
        if (has(key))
            out = get_as<bool>(j[key], key);
    };
    number("alpha", c.alpha);
    flag("fill_polls", c.fill_polls);
    flag("fill_engagement", c.fill_engagement);
    flag("standardize", c.standardize);
    flag("difference_all", c.difference_all);
    flag("strict", c.strict);
    if (has("out_dir")) {
        const fs::path out(get_as<std::string>(j["out_dir"], "out_dir"));
        c.out_dir = out.is_absolute() ? out : (base_dir / out).lexically_normal();
    } else {
        c.out_dir = (base_dir / "out").lexically_normal();
    }
    if (has("seed"))
        c.seed = get_as<std::uint64_t>(j["seed"], "seed");
    number("lasso_lambda", c.lasso_lambda);
    number("elastic_net_lambda", c.elastic_net_lambda);
    number("elastic_net_mix", c.elastic_net_mix);
    number("ridge_lambda", c.ridge_lambda);
    number("svr_c", c.svr_c);
    number("svr_epsilon", c.svr_epsilon);
    if (has("svr_gamma"))
        c.svr_gamma = get_as<double>(j["svr_gamma"], "svr_gamma");
    number("cd_tol", c.cd_tol);
    if (has("cd_max_iter"))
        c.cd_max_iter = get_as<int>(j["cd_max_iter"], "cd_max_iter");
    if (has("models")) {
        std::set<ModelKind> chosen;
        for (const auto& m : get_as<std::vector<std::string>>(j["models"], "models")) {
            const auto kind = parse_model_kind(m);
            if (!kind)
                config_error("unknown model '" + m + "'");
            chosen.insert(*kind);
        }
        if (chosen.empty())
            config_error("models must name at least one model");
        c.models.assign(chosen.begin(), chosen.end());
    }
    if (has("actual_share_a"))
        c.actual_share[0] = get_as<double>(j["actual_share_a"], "actual_share_a");
    if (has("actual_share_b"))
        c.actual_share[1] = get_as<double>(j["actual_share_b"], "actual_share_b");
    auto column = [&](const char* key, std::string& out) {
        if (has(key))
            out = get_as<std::string>(j[key], key);
    };
    column("column_created_at", c.schema.created_at);
    column("column_text", c.schema.text);
    column("column_likes", c.schema.likes);
    column("column_retweets", c.schema.retweets);
    column("column_followers", c.schema.followers);
    column("column_tweet_id", c.schema.tweet_id);
    c.validate();
    return c;
}

PipelineConfig load_config(const fs::path& path) {
    return parse_config(slurp(path), path.has_parent_path() ? path.parent_path() : fs::path("."));
}

std::string canonical_config(const PipelineConfig& config) { return config_object(config, false).dump(); }

std::string config_hash(const PipelineConfig& config) { return fnv1a_hex(canonical_config(config)); }

std::string config_to_json(const PipelineConfig& config) {
    json j = config_object(config, false);
    if (!config.lexicon)
        j.erase("lexicon");
    if (!config.emoji_lexicon)
        j.erase("emoji_lexicon");
    for (const char* k : {"svr_gamma", "actual_share_a", "actual_share_b"})
        if (j[k].is_null())
            j.erase(k);
    return j.dump(2) + "\n";
}

std::vector<ModelSpec> model_specs(const PipelineConfig& c) {
    std::vector<ModelSpec> specs;
    for (ModelSpec spec : default_registry()) {
        if (!c.models.empty() && std::find(c.models.begin(), c.models.end(), spec.kind) == c.models.end())
            continue;
        switch (spec.kind) {
        case ModelKind::Lasso: spec.lambda = c.lasso_lambda; break;
        case ModelKind::ElasticNet:
            spec.lambda = c.elastic_net_lambda;
            spec.mix = c.elastic_net_mix;
            break;
        case ModelKind::Ridge: spec.lambda = c.ridge_lambda; break;
        case ModelKind::SvrLinear:
        case ModelKind::SvrRbf:
            spec.C = c.svr_c;
            spec.epsilon = c.svr_epsilon;
            spec.gamma = c.svr_gamma;
            break;
        }
        spec.tol = c.cd_tol;
        spec.max_iter = c.cd_max_iter;
        specs.push_back(spec);
    }
    return specs;
}

fs::path default_data_dir() {
    if (const char* env = std::getenv("BALLOTWIRE_DATA_DIR"); env && *env)
        return env;
    return BALLOTWIRE_DEFAULT_DATA_DIR;
}

Lexicon load_config_lexicon(const PipelineConfig& config) {
    const fs::path lex = config.lexicon ? config.lexicon->resolved : default_data_dir() / "vader_lexicon.txt";
    const fs::path emoji =
        config.emoji_lexicon ? config.emoji_lexicon->resolved : default_data_dir() / "emoji_utf8_lexicon.txt";
    require_file(lex, "lexicon");
    require_file(emoji, "emoji lexicon");
    Lexicon lexicon = load_lexicon(lex);
    lexicon.load_emoji(emoji);
    return lexicon;
}

std::optional<Stage> parse_stage(std::string_view name) {
    static constexpr std::array<std::pair<std::string_view, Stage>, 8> table{{{"ingest", Stage::Ingest},
                                                                               {"featurize", Stage::Featurize},
                                                                               {"adf", Stage::Adf},
                                                                               {"train", Stage::Train},
                                                                               {"forecast", Stage::Forecast},
                                                                               {"evaluate", Stage::Evaluate},
                                                                               {"plot", Stage::Plot},
                                                                               {"all", Stage::All}}};
    for (const auto& [n, s] : table)
        if (n == name)
            return s;
    return std::nullopt;
}

// ---------------------------------------------------------------- stages

Pipeline::Pipeline(PipelineConfig config) : config_(std::move(config)) {
    config_.validate();
    hash_ = config_hash(config_);
}

ArtifactMeta Pipeline::meta() const {
    return {hash_, config_.difference_all ? TargetMode::Difference : TargetMode::Level, config_.standardize};
}

const IngestOutcome& Pipeline::ingest() {
    if (ingest_)
        return *ingest_;
    for (std::size_t i = 0; i < 2; ++i) {
        require_file(config_.tweets[i].resolved, "tweet file");
        require_file(config_.posts[i].resolved, "candidate post file");
    }
    require_file(config_.polls.resolved, "polling file");

    IngestOutcome out;
    const ParseOptions opt{config_.strict};
    for (Candidate c : kCandidates) {
        const auto i = index_of(c);
        auto tweets = parse_tweet_csv(config_.tweets[i].resolved, c, config_.schema, opt);
        auto posts = parse_candidate_csv(config_.posts[i].resolved, c, config_.schema, opt);
        out.dropped_tweets[i] = tweets.dropped;
        out.dropped_posts[i] = posts.dropped;
        const DateRange r = config_.range;
        out.tweets_outside_range[i] =
            erase_outside(tweets.records, [&](const RawTweet& t) { return r.contains(utc_day(t.created_at)); });
        out.posts_outside_range[i] =
            erase_outside(posts.records, [&](const CandidatePost& p) { return r.contains(utc_day(p.created_at)); });
        out.corpus.tweets.insert(out.corpus.tweets.end(), tweets.records.begin(), tweets.records.end());
        out.corpus.posts.insert(out.corpus.posts.end(), posts.records.begin(), posts.records.end());
    }
    out.corpus.polls = parse_polling_csv(config_.polls.resolved, config_.names);
    out.corpus.date_range = config_.range;
    out.validation = validate_corpus(out.corpus, config_.range);
    out.polls = config_.fill_polls ? forward_fill_polls(out.corpus.polls, config_.range) : out.corpus.polls;
    ingest_ = std::move(out);
    return *ingest_;
}

const std::array<FeatureFrame, 2>& Pipeline::frames() {
    if (frames_)
        return *frames_;
    const IngestOutcome& in = ingest();
    const auto blocking = in.validation.blocking(config_.fill_polls, config_.fill_engagement);
    if (!blocking.empty())
        throw Error(finding_error(blocking.front().kind),
                    std::to_string(blocking.size()) + " blocking validation finding(s); first: " +
                        describe(blocking.front(), config_.names));
    if (!lexicon_)
        lexicon_ = load_config_lexicon(config_);
    const Lexicon& lex = *lexicon_;
    const CompoundScorer scorer = [&lex](std::string_view text) { return score_text(text, lex).compound; };

    std::array<FeatureFrame, 2> out;
    for (Candidate c : kCandidates) {
        std::vector<RawTweet> tweets;
        std::vector<CandidatePost> posts;
        for (const auto& t : in.corpus.tweets)
            if (t.candidate_tag == c)
                tweets.push_back(t);
        for (const auto& p : in.corpus.posts)
            if (p.candidate == c)
                posts.push_back(p);
        const auto sums = aggregate_hashtag_tweets(tweets, scorer);
        const auto means = aggregate_candidate_engagement(posts);
        out[index_of(c)] =
            assemble_frame(sums, means, in.polls, c, config_.range, AssembleOptions{config_.fill_engagement});
    }
    frames_ = std::move(out);
    return *frames_;
}

const StationarityReport& Pipeline::adf() {
    if (!adf_) {
        AdfOptions opt;
        opt.alpha = config_.alpha;
        adf_ = frame_stationarity_report(frames(), opt);
    }
    return *adf_;
}

const std::array<FeatureFrame, 2>& Pipeline::model_frames() {
    if (!model_frames_) {
        const auto scope = config_.difference_all ? DifferencingScope::All : DifferencingScope::Features;
        const auto& lv = frames();
        model_frames_ = std::array<FeatureFrame, 2>{apply_differencing(lv[0], scope), apply_differencing(lv[1], scope)};
    }
    return *model_frames_;
}

const TrainOutcome& Pipeline::train() {
    if (train_)
        return *train_;
    const auto& mf = model_frames();
    const auto mode = config_.difference_all ? TargetMode::Difference : TargetMode::Level;
    const auto specs = model_specs(config_);
    const FitOptions fit{config_.standardize};
    TrainOutcome out;
    for (std::size_t i = 0; i < 2; ++i) {
        out.sets[i] = make_sliding_window(mf[i], ingest().polls, mode);
        if (out.sets[i].size() != config_.split.total())
            throw Error(ErrorKind::SpecMismatch,
                        "split " + std::to_string(config_.split.n_train) + "/" + std::to_string(config_.split.n_val) +
                            "/" + std::to_string(config_.split.n_test) + " does not cover the " +
                            std::to_string(out.sets[i].size()) + " usable rows");
        out.splits[i] = split(out.sets[i], config_.split);
        out.selection[i] = pick_model(specs, out.splits[i].train, out.splits[i].val, fit);
        const SupervisedSet history = concat(out.splits[i].train, out.splits[i].val);
        out.final_models[i] = fit_model(out.selection[i].winner().spec, history.X, history.y, config_.standardize);
        out.final_models[i].columns = input_columns();
    }
    train_ = std::move(out);
    return *train_;
}

const ForecastReport& Pipeline::report() {
    if (report_)
        return *report_;
    const TrainOutcome& t = train();
    std::vector<CandidateEvaluation> evals;
    for (Candidate c : kCandidates) {
        const auto i = index_of(c);
        CandidateEvaluation e;
        e.candidate = c;
        e.name = config_.names[c];
        e.spec = t.selection[i].winner().spec;
        e.validation_mae = *t.selection[i].winner().validation_mae;
        e.history = concat(t.splits[i].train, t.splits[i].val);
        e.test = t.splits[i].test;
        e.actual_share = config_.actual_share[i];
        evals.push_back(std::move(e));
    }
    report_ = evaluate_test(evals, FitOptions{config_.standardize});
    return *report_;
}

// ---------------------------------------------------------------- artifacts

std::vector<fs::path> Pipeline::write(Stage stage) {
    std::error_code ec;
    fs::create_directories(config_.out_dir, ec);
    if (ec)
        throw Error(ErrorKind::IoError, "cannot create " + config_.out_dir.string() + ": " + ec.message());
    switch (stage) {
    case Stage::Ingest: return write_ingest();
    case Stage::Featurize: return write_featurize();
    case Stage::Adf: return write_adf();
    case Stage::Train: return write_train();
    case Stage::Forecast: return write_forecast();
    case Stage::Evaluate: return write_evaluate();
    case Stage::Plot: return write_plot();
    case Stage::All: break;
    }
    std::vector<fs::path> all;
    for (Stage s : {Stage::Ingest, Stage::Featurize, Stage::Adf, Stage::Train, Stage::Forecast, Stage::Evaluate,
                    Stage::Plot}) {
        auto written = write(s);
        all.insert(all.end(), written.begin(), written.end());
    }
    return all;
}

std::vector<fs::path> Pipeline::write_ingest() {
    const IngestOutcome& in = ingest();
    ordered_json j;
    j["config_hash"] = hash_;
    j["columns"] = input_columns();
    j["start"] = format_date(config_.range.start);
    j["end"] = format_date(config_.range.end);
    ordered_json cands = ordered_json::array();
    for (Candidate c : kCandidates) {
        const auto i = index_of(c);
        std::size_t tweets = 0, posts = 0;
        for (const auto& t : in.corpus.tweets)
            tweets += t.candidate_tag == c;
        for (const auto& p : in.corpus.posts)
            posts += p.candidate == c;
        cands.push_back({{"name", config_.names[c]},
                         {"tweets", tweets},
                         {"posts", posts},
                         {"dropped_tweet_rows", in.dropped_tweets[i]},
                         {"dropped_post_rows", in.dropped_posts[i]},
                         {"tweets_outside_range", in.tweets_outside_range[i]},
                         {"posts_outside_range", in.posts_outside_range[i]}});
    }
    j["candidates"] = cands;
    j["poll_days"] = in.corpus.polls.size();
    j["poll_days_after_fill"] = in.polls.size();
    ordered_json findings = ordered_json::array();
    for (const auto& f : in.validation.findings)
        findings.push_back(describe(f, config_.names));
    j["findings"] = findings;
    const auto blocking = in.validation.blocking(config_.fill_polls, config_.fill_engagement);
    j["blocking_findings"] = blocking.size();

    const fs::path report = config_.out_dir / "ingest_report.json";
    write_text_file(report, j.dump(2) + "\n");
    const fs::path ids = config_.out_dir / "tweet_ids.txt";
    export_tweet_ids(in.corpus, ids);
    if (!blocking.empty())
        throw Error(finding_error(blocking.front().kind),
                    std::to_string(blocking.size()) + " blocking validation finding(s); first: " +
                        describe(blocking.front(), config_.names));
    return {report, ids};
}

std::vector<fs::path> Pipeline::write_featurize() {
    const auto& fr = frames();
    const std::vector<std::string> comments{"config_hash: " + hash_, "columns: " + columns_line()};
    std::vector<fs::path> out;
    for (Candidate c : kCandidates) {
        const fs::path p = config_.out_dir / ("features_" + config_.names[c] + ".csv");
        write_frame_csv(p, fr[index_of(c)], display_name(config_.names[c]), comments);
        out.push_back(p);
    }
    return out;
}

std::vector<fs::path> Pipeline::write_adf() {
    const auto& rep = adf();
    const fs::path js = config_.out_dir / "adf_report.json";
    const fs::path txt = config_.out_dir / "adf_report.txt";
    write_text_file(js, adf_report_to_json(rep, config_.names, meta()));
    write_text_file(txt, adf_report_to_text(rep, config_.names, meta()));
    return {js, txt};
}

std::vector<fs::path> Pipeline::write_train() {
    const auto& t = train();
    const fs::path js = config_.out_dir / "selection.json";
    const fs::path txt = config_.out_dir / "selection.txt";
    write_text_file(js, selection_to_json(t.selection, config_.names, meta()));
    write_text_file(txt, selection_to_text(t.selection, config_.names, meta()));
    std::vector<fs::path> out{js, txt};
    for (Candidate c : kCandidates) {
        auto j = ordered_json::parse(model_to_json(t.final_models[index_of(c)]));
        j["config_hash"] = hash_;
        j["trained_on_rows"] = t.splits[index_of(c)].train.size() + t.splits[index_of(c)].val.size();
        const fs::path p = config_.out_dir / ("model_" + config_.names[c] + ".json");
        write_text_file(p, j.dump(2) + "\n");
        out.push_back(p);
    }
    return out;
}

std::vector<fs::path> Pipeline::write_forecast() {
    const fs::path p = config_.out_dir / "forecast.json";
    write_text_file(p, forecast_to_json(report(), meta()));
    return {p};
}

std::vector<fs::path> Pipeline::write_evaluate() {
    const auto& r = report();
    const fs::path js = config_.out_dir / "report.json";
    const fs::path txt = config_.out_dir / "report.txt";
    write_text_file(js, report_to_json(r, meta()));
    write_text_file(txt, report_to_text(r, meta()));
    return {js, txt};
}

std::vector<fs::path> Pipeline::write_plot() {
    const auto& r = report();
    std::vector<fs::path> out;
    for (const auto& c : r.candidates) {
        const fs::path p = config_.out_dir / ("plot_" + c.name + ".svg");
        const std::string display = display_name(c.name);
        plot(display + ": predicted vote share vs aggregate polling", c.test_dates,
             PlotSeries{"predicted (" + c.model + ")", c.predictions}, PlotSeries{"aggregate polling", c.polling}, p,
             "config_hash: " + hash_ + "; columns: " + columns_line());
        out.push_back(p);
    }
    return out;
}

}  // namespace ballotwire

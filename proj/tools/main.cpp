// ballotwire command-line front end.
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ballotwire/error.hpp"
#include "ballotwire/numeric.hpp"
#include "ballotwire/pipeline.hpp"
#include "ballotwire/sentiment.hpp"
#include "ballotwire/synth.hpp"
#include "json.hpp"

namespace bw = ballotwire;

namespace {

struct Overrides {
    std::string config;
    std::optional<std::string> out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<double> alpha;
    bool fill_polls = false;
    bool fill_engagement = false;
    bool standardize = false;
    bool difference_all = false;
    bool strict = false;
    std::vector<std::string> actual_shares;
};

void add_pipeline_options(CLI::App& cmd, Overrides& o) {
    cmd.add_option("--config", o.config, "JSON config file")->required();
    cmd.add_option("--out-dir", o.out_dir, "artifact directory (overrides config)");
    cmd.add_option("--seed", o.seed, "seed recorded in the config hash");
    cmd.add_option("--alpha", o.alpha, "ADF significance level");
    cmd.add_flag("--fill-polls", o.fill_polls, "forward-fill missing poll days");
    cmd.add_flag("--fill-engagement", o.fill_engagement, "carry engagement means over post-less days");
    cmd.add_flag("--standardize", o.standardize, "z-score inputs before fitting");
    cmd.add_flag("--difference-all", o.difference_all, "difference prev_poll and model the poll change");
    cmd.add_flag("--strict", o.strict, "treat any malformed row as fatal");
    cmd.add_option("--actual-share", o.actual_shares, "<candidate>=<pct>, repeatable");
}

bw::PipelineConfig effective_config(const Overrides& o) {
    bw::PipelineConfig c = bw::load_config(o.config);
    if (o.out_dir)
        c.out_dir = *o.out_dir;
    if (o.seed)
        c.seed = *o.seed;
    if (o.alpha)
        c.alpha = *o.alpha;
    c.fill_polls = c.fill_polls || o.fill_polls;
    c.fill_engagement = c.fill_engagement || o.fill_engagement;
    c.standardize = c.standardize || o.standardize;
    c.difference_all = c.difference_all || o.difference_all;
    c.strict = c.strict || o.strict;
    for (const auto& item : o.actual_shares) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw bw::Error(bw::ErrorKind::InvalidArgument, "--actual-share expects <candidate>=<pct>, got " + item);
        const auto who = c.names.find(item.substr(0, eq));
        if (!who)
            throw bw::Error(bw::ErrorKind::InvalidArgument, "--actual-share names an unknown candidate: " + item);
        const auto value = bw::parse_number(item.substr(eq + 1));
        if (!value)
            throw bw::Error(bw::ErrorKind::InvalidArgument, "--actual-share value is not a number: " + item);
        c.actual_share[bw::index_of(*who)] = *value;
    }
    c.validate();
    return c;
}

void setup_logging() {
    auto logger = std::make_shared<spdlog::logger>("ballotwire", std::make_shared<spdlog::sinks::stderr_sink_mt>());
    logger->set_pattern("[%l] %v");
    spdlog::set_default_logger(logger);
    spdlog::set_level(spdlog::level::warn);
    if (const char* env = std::getenv("BALLOTWIRE_LOG"); env && *env)
        spdlog::set_level(spdlog::level::from_str(env));
}

int run_stage(bw::Stage stage, const Overrides& o) {
    bw::Pipeline p(effective_config(o));
    spdlog::info("config hash {}", p.hash());
    const auto written = p.write(stage);
    switch (stage) {
    case bw::Stage::Adf: std::cout << bw::adf_report_to_text(p.adf(), p.config().names, p.meta()); break;
    case bw::Stage::Train:
        std::cout << bw::selection_to_text(p.train().selection, p.config().names, p.meta());
        break;
    case bw::Stage::Evaluate:
    case bw::Stage::All: std::cout << bw::report_to_text(p.report(), p.meta()); break;
    default: break;
    }
    for (const auto& path : written)
        spdlog::info("wrote {}", path.string());
    return 0;
}

struct SynthArgs {
    std::string out_dir;
    std::uint64_t seed = 7;
    std::string regime = "stationary";
    int days = 20;
    int tweets_per_day = 40;
    int posts_per_day = 3;
    double noise_sigma = 0.3;
    double sentiment_link = 1.0;
};

int run_synth(const SynthArgs& a) {
    bw::SynthSpec spec;
    spec.seed = a.seed;
    spec.n_days = a.days;
    spec.tweets_per_day = a.tweets_per_day;
    spec.posts_per_day = a.posts_per_day;
    spec.noise_sigma = a.noise_sigma;
    spec.sentiment_link = a.sentiment_link;
    spec.regime = a.regime == "random-walk" ? bw::SynthRegime::RandomWalk : bw::SynthRegime::Stationary;
    spec.validate();
    const bw::fs::path dir(a.out_dir);
    std::error_code ec;
    bw::fs::create_directories(dir, ec);
    if (ec)
        throw bw::Error(bw::ErrorKind::IoError, "cannot create " + dir.string());
    const bw::CandidateNames names;
    const auto files = bw::write_corpus(bw::gen_corpus(spec), dir, names);

    nlohmann::ordered_json j;
    j["candidate_a"] = names.a;
    j["candidate_b"] = names.b;
    j["tweets_a"] = files.tweets[0].filename().string();
    j["tweets_b"] = files.tweets[1].filename().string();
    j["posts_a"] = files.posts[0].filename().string();
    j["posts_b"] = files.posts[1].filename().string();
    j["polls"] = files.polls.filename().string();
    j["start"] = bw::format_date(spec.tweet_days().start);
    j["end"] = bw::format_date(spec.tweet_days().end);
    // 20 days lose one row to differencing; keep 4 for test and 3 for validation
    j["n_test"] = 4;
    j["n_val"] = 3;
    j["n_train"] = spec.n_days - 1 - 7;
    j["out_dir"] = "out";
    j["seed"] = spec.seed;
    std::ofstream out(dir / "config.json", std::ios::binary);
    out << j.dump(2) << "\n";
    if (!out)
        throw bw::Error(bw::ErrorKind::IoError, "cannot write " + (dir / "config.json").string());
    spdlog::info("wrote synthetic corpus to {}", dir.string());
    std::cout << (dir / "config.json").string() << "\n";
    return 0;
}

int run_sentiment(const std::optional<std::string>& text, const std::optional<std::string>& file,
                  const std::optional<std::string>& lexicon_path) {
    const bw::fs::path lex = lexicon_path ? bw::fs::path(*lexicon_path) : bw::default_data_dir() / "vader_lexicon.txt";
    bw::Lexicon lexicon = bw::load_lexicon(lex);
    if (!lexicon_path)
        lexicon.load_emoji(bw::default_data_dir() / "emoji_utf8_lexicon.txt");
    auto emit = [&](std::string_view t) {
        const auto s = bw::score_text(t, lexicon);
        nlohmann::ordered_json j{{"neg", s.neg}, {"neu", s.neu}, {"pos", s.pos}, {"compound", s.compound}};
        std::cout << j.dump() << "\n";
    };
    if (text)
        emit(*text);
    if (file) {
        std::ifstream in(*file, std::ios::binary);
        if (!in)
            throw bw::Error(bw::ErrorKind::IoError, "cannot read " + *file);
        for (std::string line; std::getline(in, line);) {
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            emit(line);
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    setup_logging();
    CLI::App app{"Election vote-share forecasting from social media features"};
    app.require_subcommand(1);

    Overrides o;
    std::optional<bw::Stage> stage;
    for (const char* name : {"ingest", "featurize", "adf", "train", "forecast", "evaluate", "plot", "all"}) {
        static const std::map<std::string, std::string> help{
            {"ingest", "validate inputs and export tweet ids"},
            {"featurize", "write the per-candidate feature frames"},
            {"adf", "stationarity report for the ten feature columns"},
            {"train", "model selection table and fitted models"},
            {"forecast", "test-window predictions"},
            {"evaluate", "forecast report (JSON and text)"},
            {"plot", "prediction vs polling SVG per candidate"},
            {"all", "every stage end to end"}};
        auto* cmd = app.add_subcommand(name, help.at(name));
        add_pipeline_options(*cmd, o);
        cmd->callback([&stage, name] { stage = bw::parse_stage(name); });
    }

    SynthArgs sa;
    auto* synth = app.add_subcommand("synth", "generate a seeded fixture corpus and config");
    synth->add_option("--out-dir", sa.out_dir, "target directory")->required();
    synth->add_option("--seed", sa.seed, "generator seed");
    synth->add_option("--regime", sa.regime, "stationary or random-walk")
        ->check(CLI::IsMember({"stationary", "random-walk"}));
    synth->add_option("--days", sa.days, "tweet days");
    synth->add_option("--tweets-per-day", sa.tweets_per_day);
    synth->add_option("--posts-per-day", sa.posts_per_day);
    synth->add_option("--noise-sigma", sa.noise_sigma);
    synth->add_option("--sentiment-link", sa.sentiment_link);

    std::optional<std::string> text, file, lexicon;
    auto* sent = app.add_subcommand("sentiment-score", "print sentiment scores as JSON lines");
    auto* text_opt = sent->add_option("--text", text, "text to score");
    auto* file_opt = sent->add_option("--file", file, "file with one text per line");
    sent->add_option("--lexicon", lexicon, "lexicon file (default: bundled)");
    text_opt->excludes(file_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error[Usage]: " << e.what() << "\n";
        return 1;
    }

    try {
        if (stage)
            return run_stage(*stage, o);
        if (*synth)
            return run_synth(sa);
        if (*sent) {
            if (!text && !file)
                throw bw::Error(bw::ErrorKind::InvalidArgument, "sentiment-score needs --text or --file");
            return run_sentiment(text, file, lexicon);
        }
    } catch (const bw::Error& e) {
        std::cerr << "error[" << bw::to_string(e.kind()) << "]: " << e.what() << "\n";
        return static_cast<int>(e.category());
    } catch (const std::exception& e) {
        std::cerr << "error[Internal]: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ballotwire/evaluate.hpp"
#include "ballotwire/features.hpp"
#include "ballotwire/ingest.hpp"
#include "ballotwire/models.hpp"
#include "ballotwire/report.hpp"
#include "ballotwire/sentiment.hpp"
#include "ballotwire/stationarity.hpp"
#include "ballotwire/supervise.hpp"

namespace ballotwire {

namespace fs = std::filesystem;

/// An input path as written in the config plus its resolved location.
struct ConfigPath {
    std::string raw;
    fs::path resolved;
};

/// Effective run configuration. Loaded from a flat JSON object; CLI flags
/// are applied afterwards and win.
struct PipelineConfig {
    CandidateNames names;
    std::array<ConfigPath, 2> tweets;
    std::array<ConfigPath, 2> posts;
    ConfigPath polls;
    std::optional<ConfigPath> lexicon;        // builtin when empty
    std::optional<ConfigPath> emoji_lexicon;  // builtin when empty
    TweetSchema schema;
    DateRange range{};  // tweet days; polls must also cover the day before
    SplitSpec split;
    double alpha = 0.05;
    bool fill_polls = false;
    bool fill_engagement = false;
    bool standardize = false;
    bool difference_all = false;
    bool strict = false;
    fs::path out_dir = "out";
    std::uint64_t seed = 7;
    // hyperparameters
    double lasso_lambda = 1.0;
    double elastic_net_lambda = 1.0;
    double elastic_net_mix = 0.5;
    double ridge_lambda = 1.0;
    double svr_c = 1.0;
    double svr_epsilon = 0.1;
    std::optional<double> svr_gamma;
    double cd_tol = 1e-4;
    int cd_max_iter = 1000;
    std::vector<ModelKind> models;  // registry order; empty means all five
    std::array<std::optional<double>, 2> actual_share;

    void validate() const;  // throws ConfigError
};

/// Parses config JSON. Relative paths resolve against `base_dir`. Unknown
/// keys are a ConfigError.
PipelineConfig parse_config(std::string_view json_text, const fs::path& base_dir);
PipelineConfig load_config(const fs::path& path);

/// Sorted-key JSON of every setting except out_dir; paths as written.
std::string canonical_config(const PipelineConfig& config);
std::string config_hash(const PipelineConfig& config);

/// Config JSON that parse_config accepts and that reproduces `config`.
std::string config_to_json(const PipelineConfig& config);

std::vector<ModelSpec> model_specs(const PipelineConfig& config);

/// Directory of the bundled lexicon files. BALLOTWIRE_DATA_DIR in the
/// environment overrides the build-time location.
fs::path default_data_dir();

Lexicon load_config_lexicon(const PipelineConfig& config);

struct IngestOutcome {
    Corpus corpus;  // tweets and posts restricted to the configured days
    std::vector<PollSnapshot> polls;  // after optional forward fill
    ValidationReport validation;
    std::array<std::size_t, 2> dropped_tweets{};
    std::array<std::size_t, 2> dropped_posts{};
    std::array<std::size_t, 2> tweets_outside_range{};
    std::array<std::size_t, 2> posts_outside_range{};
};

struct TrainOutcome {
    std::array<SupervisedSet, 2> sets;
    std::array<SplitSets, 2> splits;
    std::array<SelectionResult, 2> selection;
    std::array<FittedModel, 2> final_models;  // selected spec refitted on train + validation
};

enum class Stage { Ingest, Featurize, Adf, Train, Forecast, Evaluate, Plot, All };

std::optional<Stage> parse_stage(std::string_view name);

/// Lazily computes each stage from the inputs; every call after the first
/// returns the cached result.
class Pipeline {
public:
    explicit Pipeline(PipelineConfig config);

    const PipelineConfig& config() const { return config_; }
    const std::string& hash() const { return hash_; }
    ArtifactMeta meta() const;

    const IngestOutcome& ingest();
    const std::array<FeatureFrame, 2>& frames();  // levels
    const StationarityReport& adf();
    const std::array<FeatureFrame, 2>& model_frames();  // differenced once
    const TrainOutcome& train();
    const ForecastReport& report();

    /// Runs `stage` and writes its artifacts into out_dir. Returns the
    /// written paths in order.
    std::vector<fs::path> write(Stage stage);

private:
    std::vector<fs::path> write_ingest();
    std::vector<fs::path> write_featurize();
    std::vector<fs::path> write_adf();
    std::vector<fs::path> write_train();
    std::vector<fs::path> write_forecast();
    std::vector<fs::path> write_evaluate();
    std::vector<fs::path> write_plot();

    PipelineConfig config_;
    std::string hash_;
    std::optional<Lexicon> lexicon_;
    std::optional<IngestOutcome> ingest_;
    std::optional<std::array<FeatureFrame, 2>> frames_;
    std::optional<StationarityReport> adf_;
    std::optional<std::array<FeatureFrame, 2>> model_frames_;
    std::optional<TrainOutcome> train_;
    std::optional<ForecastReport> report_;
};

}  // namespace ballotwire

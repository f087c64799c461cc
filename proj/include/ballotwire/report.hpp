#pragma once

#include <array>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ballotwire/evaluate.hpp"
#include "ballotwire/ingest.hpp"
#include "ballotwire/stationarity.hpp"
#include "ballotwire/supervise.hpp"

namespace ballotwire {

/// Provenance stamped into every artifact.
struct ArtifactMeta {
    std::string config_hash;
    TargetMode target_mode = TargetMode::Level;
    bool standardize = false;
};

std::vector<std::string> input_columns();

std::string report_to_json(const ForecastReport& report, const ArtifactMeta& meta);
std::string report_to_text(const ForecastReport& report, const ArtifactMeta& meta);

/// Inverse of report_to_json for the report fields (metadata is dropped).
ForecastReport report_from_json(std::string_view text);

/// Test-window predictions only.
std::string forecast_to_json(const ForecastReport& report, const ArtifactMeta& meta);

std::string selection_to_json(std::span<const SelectionResult> results, const CandidateNames& names,
                              const ArtifactMeta& meta);
std::string selection_to_text(std::span<const SelectionResult> results, const CandidateNames& names,
                              const ArtifactMeta& meta);

std::string adf_report_to_json(const StationarityReport& report, const CandidateNames& names,
                               const ArtifactMeta& meta);
std::string adf_report_to_text(const StationarityReport& report, const CandidateNames& names,
                               const ArtifactMeta& meta);

// ---------------------------------------------------------------- SVG

struct PlotSeries {
    std::string label;
    std::vector<double> values;
};

/// Two-line chart on a fixed 640x400 canvas. The plot area spans
/// x in [70, 610] and y in [70, 340]; dates map linearly by index, shares
/// linearly onto [lo, hi], the data range padded by 10% (0.5 points when flat).
std::string render_svg(std::string_view title, std::span<const Date> dates, const PlotSeries& predicted,
                       const PlotSeries& polling, std::string_view comment = {});

/// Writes render_svg output to `path`.
void plot(std::string_view title, std::span<const Date> dates, const PlotSeries& predicted,
          const PlotSeries& polling, const std::filesystem::path& path, std::string_view comment = {});

/// Writes `contents` to `path`, throwing IoError on failure.
void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace ballotwire

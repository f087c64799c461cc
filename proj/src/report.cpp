#include "ballotwire/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>

#include "ballotwire/error.hpp"
#include "json.hpp"

namespace ballotwire {
namespace {

using nlohmann::ordered_json;

constexpr std::string_view kR2Note =
    "R^2 of each candidate's test-window predictions against aggregate polling, computed jointly over the "
    "window; mean_r2_vs_polling is the arithmetic mean over the two candidates";
constexpr std::string_view kValidationNote =
    "validation forecasts are recursive, anchored at the last training-day share";

ordered_json meta_json(const ArtifactMeta& meta) {
    ordered_json j;
    j["config_hash"] = meta.config_hash;
    j["columns"] = input_columns();
    j["target"] = meta.target_mode == TargetMode::Level ? "level" : "difference";
    j["differencing"] = meta.target_mode == TargetMode::Level ? "features" : "all";
    j["standardize"] = meta.standardize;
    return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string fixed(double v, int digits = 3) {
    // avoid printing "-0.000"
    std::string s = fmt::format("{:.{}f}", v, digits);
    if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-')
        s.erase(0, 1);
    return s;
}

std::string optional_fixed(const std::optional<double>& v) { return v ? fixed(*v) : std::string("n/a"); }

std::string header_lines(const ArtifactMeta& meta, std::string_view prefix) {
    std::string cols;
    for (const auto& c : input_columns())
        cols += (cols.empty() ? "" : ",") + c;
    return fmt::format("{}config_hash: {}\n{}columns: {}\n", prefix, meta.config_hash, prefix, cols);
}

}  // namespace

std::vector<std::string> input_columns() { return {kInputColumns.begin(), kInputColumns.end()}; }

std::string report_to_json(const ForecastReport& r, const ArtifactMeta& meta) {
    ordered_json j = meta_json(meta);
    j["validation"] = kValidationNote;
    j["r2_definition"] = kR2Note;
    ordered_json cands = ordered_json::array();
    for (const auto& c : r.candidates) {
        ordered_json cj;
        cj["name"] = c.name;
        cj["model"] = c.model;
        cj["validation_mae"] = c.validation_mae;
        cj["train_rows"] = c.train_rows;
        ordered_json days = ordered_json::array();
        for (std::size_t i = 0; i < c.predictions.size(); ++i)
            days.push_back({{"date", format_date(c.test_dates[i])},
                            {"predicted", c.predictions[i]},
                            {"polling", c.polling[i]}});
        cj["test"] = days;
        cj["election_day_prediction"] = c.election_day_prediction;
        cj["r2_vs_polling"] = c.r2_vs_polling;
        if (c.actual_share)
            cj["actual_share"] = *c.actual_share;
        cands.push_back(cj);
    }
    j["candidates"] = cands;
    j["winner_predicted"] = r.candidates[index_of(r.winner_predicted)].name;
    if (r.winner_correct)
        j["winner_correct"] = *r.winner_correct;
    if (r.mae_vs_actual)
        j["mae_vs_actual"] = *r.mae_vs_actual;
    j["mean_r2_vs_polling"] = r.mean_r2_vs_polling;
    if (r.baseline_mae)
        j["baseline_mae"] = *r.baseline_mae;
    if (r.delta_vs_baseline)
        j["delta_vs_baseline"] = *r.delta_vs_baseline;
    return dump(j);
}

ForecastReport report_from_json(std::string_view text) {
    try {
        const auto j = ordered_json::parse(text);
        ForecastReport r;
        const auto& cands = j.at("candidates");
        if (cands.size() != 2)
            throw Error(ErrorKind::MalformedRow, "report JSON: expected two candidates");
        for (std::size_t i = 0; i < 2; ++i) {
            const auto& cj = cands[i];
            CandidateResult& c = r.candidates[i];
            c.candidate = static_cast<Candidate>(i);
            c.name = cj.at("name").get<std::string>();
            c.model = cj.at("model").get<std::string>();
            c.validation_mae = cj.at("validation_mae").get<double>();
            c.train_rows = cj.at("train_rows").get<std::size_t>();
            for (const auto& d : cj.at("test")) {
                const auto date = parse_date(d.at("date").get<std::string>());
                if (!date)
                    throw Error(ErrorKind::MalformedRow, "report JSON: bad date");
                c.test_dates.push_back(*date);
                c.predictions.push_back(d.at("predicted").get<double>());
                c.polling.push_back(d.at("polling").get<double>());
            }
            c.election_day_prediction = cj.at("election_day_prediction").get<double>();
            c.r2_vs_polling = cj.at("r2_vs_polling").get<double>();
            if (cj.contains("actual_share"))
                c.actual_share = cj["actual_share"].get<double>();
        }
        const auto winner = j.at("winner_predicted").get<std::string>();
        r.winner_predicted = winner == r.candidates[1].name ? Candidate::B : Candidate::A;
        if (j.contains("winner_correct"))
            r.winner_correct = j["winner_correct"].get<bool>();
        if (j.contains("mae_vs_actual"))
            r.mae_vs_actual = j["mae_vs_actual"].get<double>();
        r.mean_r2_vs_polling = j.at("mean_r2_vs_polling").get<double>();
        if (j.contains("baseline_mae"))
            r.baseline_mae = j["baseline_mae"].get<double>();
        if (j.contains("delta_vs_baseline"))
            r.delta_vs_baseline = j["delta_vs_baseline"].get<double>();
        return r;
    } catch (const ordered_json::exception& e) {
        throw Error(ErrorKind::MalformedRow, std::string("report JSON: ") + e.what());
    }
}

std::string report_to_text(const ForecastReport& r, const ArtifactMeta& meta) {
    std::string out = header_lines(meta, "# ");
    for (const auto& c : r.candidates) {
        out += fmt::format("\n{} (model {}, validation MAE {}, refit on {} rows)\n", c.name, c.model,
                           fixed(c.validation_mae), c.train_rows);
        out += fmt::format("  {:<12}{:>12}{:>12}\n", "date", "predicted", "polling");
        for (std::size_t i = 0; i < c.predictions.size(); ++i)
            out += fmt::format("  {:<12}{:>12}{:>12}\n", format_date(c.test_dates[i]), fixed(c.predictions[i]),
                               fixed(c.polling[i]));
        out += fmt::format("  election-day prediction {}   R^2 vs polling {}\n", fixed(c.election_day_prediction),
                           fixed(c.r2_vs_polling));
    }
    out += "\n";
    out += fmt::format("{:<24}{}\n", "winner predicted", r.candidates[index_of(r.winner_predicted)].name);
    out += fmt::format("{:<24}{}\n", "winner correct",
                       r.winner_correct ? (*r.winner_correct ? "yes" : "no") : "n/a (no actual shares)");
    out += fmt::format("{:<24}{}\n", "MAE vs actual", optional_fixed(r.mae_vs_actual));
    out += fmt::format("{:<24}{}\n", "baseline MAE", optional_fixed(r.baseline_mae));
    out += fmt::format("{:<24}{}\n", "delta vs baseline", optional_fixed(r.delta_vs_baseline));
    out += fmt::format("{:<24}{}\n", "mean R^2 vs polling", fixed(r.mean_r2_vs_polling));
    return out;
}

std::string forecast_to_json(const ForecastReport& r, const ArtifactMeta& meta) {
    ordered_json j = meta_json(meta);
    ordered_json cands = ordered_json::array();
    for (const auto& c : r.candidates) {
        ordered_json days = ordered_json::array();
        for (std::size_t i = 0; i < c.predictions.size(); ++i)
            days.push_back({{"date", format_date(c.test_dates[i])}, {"predicted", c.predictions[i]}});
        cands.push_back({{"name", c.name}, {"model", c.model}, {"train_rows", c.train_rows}, {"test", days}});
    }
    j["candidates"] = cands;
    return dump(j);
}

std::string selection_to_json(std::span<const SelectionResult> results, const CandidateNames& names,
                              const ArtifactMeta& meta) {
    ordered_json j = meta_json(meta);
    j["validation"] = kValidationNote;
    ordered_json cands = ordered_json::array();
    for (std::size_t i = 0; i < results.size(); ++i) {
        ordered_json table = ordered_json::array();
        for (const auto& e : results[i].table) {
            ordered_json row;
            row["model"] = e.spec.name();
            row["validation_mae"] = e.validation_mae ? ordered_json(*e.validation_mae) : ordered_json(nullptr);
            row["validation_predictions"] = e.validation_predictions;
            row["converged"] = e.converged;
            if (!e.failure.empty())
                row["failure"] = e.failure;
            table.push_back(row);
        }
        cands.push_back({{"name", names[static_cast<Candidate>(i)]},
                         {"selected", results[i].winner().spec.name()},
                         {"table", table}});
    }
    j["candidates"] = cands;
    return dump(j);
}

std::string selection_to_text(std::span<const SelectionResult> results, const CandidateNames& names,
                              const ArtifactMeta& meta) {
    std::string out = header_lines(meta, "# ");
    for (std::size_t i = 0; i < results.size(); ++i) {
        out += fmt::format("\n{}: selected {}\n", names[static_cast<Candidate>(i)], results[i].winner().spec.name());
        out += fmt::format("  {:<14}{:>16}  {}\n", "model", "validation MAE", "note");
        for (const auto& e : results[i].table) {
            std::string note = e.failure.empty() ? (e.converged ? "" : "not converged") : e.failure;
            out += fmt::format("  {:<14}{:>16}  {}\n", e.spec.name(), optional_fixed(e.validation_mae), note);
        }
    }
    return out;
}

std::string adf_report_to_json(const StationarityReport& rep, const CandidateNames& names, const ArtifactMeta& meta) {
    ordered_json j = meta_json(meta);
    j["alpha"] = rep.alpha;
    auto result = [](const AdfResult& a) {
        ordered_json r;
        r["statistic"] = a.statistic;
        r["p_value"] = a.p_value;
        r["lag_used"] = a.lag_used;
        r["n_obs"] = a.n_obs;
        r["reject_unit_root"] = a.reject_unit_root;
        return r;
    };
    ordered_json cols = ordered_json::array();
    for (const auto& c : rep.columns)
        cols.push_back({{"candidate", names[c.candidate]},
                        {"column", c.name},
                        {"levels", result(c.before)},
                        {"differenced", result(c.after)}});
    j["columns_tested"] = cols;
    j["stationary_before"] = rep.stationary_before();
    j["stationary_after"] = rep.stationary_after();
    j["nonstationary_before"] = rep.nonstationary_before();
    j["nonstationary_after"] = rep.nonstationary_after();
    return dump(j);
}

std::string adf_report_to_text(const StationarityReport& rep, const CandidateNames& names, const ArtifactMeta& meta) {
    std::string out = header_lines(meta, "# ");
    out += fmt::format("# alpha: {}\n\n", rep.alpha);
    out += fmt::format("{:<8}{:<28}{:>10}{:>10}{:>5}{:>12}{:>10}{:>10}{:>5}{:>12}\n", "cand", "column", "stat",
                       "p", "lag", "stationary", "d.stat", "d.p", "lag", "stationary");
    for (const auto& c : rep.columns)
        out += fmt::format("{:<8}{:<28}{:>10}{:>10}{:>5}{:>12}{:>10}{:>10}{:>5}{:>12}\n", names[c.candidate], c.name,
                           fixed(c.before.statistic), fixed(c.before.p_value, 4), c.before.lag_used,
                           c.before.reject_unit_root ? "yes" : "no", fixed(c.after.statistic),
                           fixed(c.after.p_value, 4), c.after.lag_used, c.after.reject_unit_root ? "yes" : "no");
    out += fmt::format("\nstationary before differencing: {}/{}\n", rep.stationary_before(), rep.columns.size());
    out += fmt::format("stationary after one difference: {}/{}\n", rep.stationary_after(), rep.columns.size());
    return out;
}

// ---------------------------------------------------------------- SVG

namespace {

constexpr double kWidth = 640, kHeight = 400;
constexpr double kLeft = 70, kRight = 610, kTop = 70, kBottom = 340;

std::string xml_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

std::string coord(double v) { return fixed(v, 2); }

}  // namespace

std::string render_svg(std::string_view title, std::span<const Date> dates, const PlotSeries& predicted,
                       const PlotSeries& polling, std::string_view comment) {
    const std::size_t n = dates.size();
    if (n < 2 || predicted.values.size() != n || polling.values.size() != n)
        throw Error(ErrorKind::LengthMismatch, "plot needs at least 2 dates and one value per date in each series");
    double lo = std::min(*std::min_element(predicted.values.begin(), predicted.values.end()),
                         *std::min_element(polling.values.begin(), polling.values.end()));
    double hi = std::max(*std::max_element(predicted.values.begin(), predicted.values.end()),
                         *std::max_element(polling.values.begin(), polling.values.end()));
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw Error(ErrorKind::InvalidArgument, "plot values must be finite");
    const double pad = hi > lo ? 0.1 * (hi - lo) : 0.5;
    lo -= pad;
    hi += pad;
    auto px = [&](std::size_t i) { return kLeft + (kRight - kLeft) * static_cast<double>(i) / static_cast<double>(n - 1); };
    auto py = [&](double v) { return kBottom - (kBottom - kTop) * (v - lo) / (hi - lo); };
    auto points = [&](const std::vector<double>& v) {
        std::string s;
        for (std::size_t i = 0; i < n; ++i)
            s += (i ? " " : "") + coord(px(i)) + "," + coord(py(v[i]));
        return s;
    };

    std::string out;
    out += fmt::format("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n",
                       kWidth, kHeight, kWidth, kHeight);
    if (!comment.empty())
        out += "<!-- " + xml_escape(comment) + " -->\n";
    out += fmt::format("<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"white\"/>\n", kWidth, kHeight);
    out += fmt::format("<text x=\"{}\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">{}</text>\n",
                       coord((kLeft + kRight) / 2), xml_escape(title));
    // axes
    out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"black\"/>\n", coord(kLeft),
                       coord(kTop), coord(kBottom));
    out += fmt::format("<line x1=\"{0}\" y1=\"{2}\" x2=\"{1}\" y2=\"{2}\" stroke=\"black\"/>\n", coord(kLeft),
                       coord(kRight), coord(kBottom));
    for (int k = 0; k <= 4; ++k) {
        const double v = lo + (hi - lo) * k / 4.0;
        out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">{}</text>\n",
                           coord(kLeft - 6), coord(py(v) + 4), fixed(v, 2));
    }
    for (std::size_t i = 0; i < n; ++i)
        out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">{}</text>\n",
                           coord(px(i)), coord(kBottom + 18), format_date(dates[i]).substr(5));
    out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">date</text>\n",
                       coord((kLeft + kRight) / 2), coord(kBottom + 42));
    out += fmt::format("<text x=\"18\" y=\"{0}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 18 {0})\">share (%)</text>\n",
                       coord((kTop + kBottom) / 2));
    // series
    out += fmt::format("<polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\" points=\"{}\"/>\n",
                       points(predicted.values));
    out += fmt::format("<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" stroke-dasharray=\"6 4\" points=\"{}\"/>\n",
                       points(polling.values));
    // legend, in the top margin
    out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"#d62728\" stroke-width=\"2\"/>\n",
                       coord(kRight - 150), coord(kTop - 32), coord(kRight - 125));
    out += fmt::format("<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"11\">{}</text>\n",
                       coord(kRight - 120), coord(kTop - 28), xml_escape(predicted.label));
    out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"#1f77b4\" stroke-width=\"2\" stroke-dasharray=\"6 4\"/>\n",
                       coord(kRight - 150), coord(kTop - 16), coord(kRight - 125));
    out += fmt::format("<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"11\">{}</text>\n",
                       coord(kRight - 120), coord(kTop - 12), xml_escape(polling.label));
    out += "</svg>\n";
    return out;
}

void plot(std::string_view title, std::span<const Date> dates, const PlotSeries& predicted, const PlotSeries& polling,
          const std::filesystem::path& path, std::string_view comment) {
    write_text_file(path, render_svg(title, dates, predicted, polling, comment));
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorKind::IoError, "cannot write " + path.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out)
        throw Error(ErrorKind::IoError, "failed writing " + path.string());
}

}  // namespace ballotwire

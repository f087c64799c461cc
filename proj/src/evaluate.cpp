#include "ballotwire/evaluate.hpp"

#include <cmath>

#include "ballotwire/error.hpp"
#include "ballotwire/numeric.hpp"

namespace ballotwire {
namespace {

void check_lengths(std::size_t a, std::size_t b) {
    if (a != b)
        throw Error(ErrorKind::LengthMismatch, "sequences differ in length (" + std::to_string(a) + " vs " +
                                                   std::to_string(b) + ")");
}

}  // namespace

double mae(std::span<const double> predicted, std::span<const double> actual) {
    check_lengths(predicted.size(), actual.size());
    if (predicted.empty())
        throw Error(ErrorKind::Empty, "mae of empty sequences");
    CompensatedSum s;
    for (std::size_t i = 0; i < predicted.size(); ++i)
        s += std::fabs(predicted[i] - actual[i]);
    return s.value() / static_cast<double>(predicted.size());
}

double r_squared(std::span<const double> predicted, std::span<const double> reference) {
    check_lengths(predicted.size(), reference.size());
    if (reference.size() < 2)
        throw Error(ErrorKind::LengthMismatch, "r_squared needs at least 2 points");
    CompensatedSum total;
    for (double v : reference)
        total += v;
    const double mean = total.value() / static_cast<double>(reference.size());
    CompensatedSum ss_res, ss_tot;
    for (std::size_t i = 0; i < reference.size(); ++i) {
        ss_res += (reference[i] - predicted[i]) * (reference[i] - predicted[i]);
        ss_tot += (reference[i] - mean) * (reference[i] - mean);
    }
    if (ss_tot.value() == 0.0)
        throw Error(ErrorKind::ConstantReference, "reference series is constant");
    return 1.0 - ss_res.value() / ss_tot.value();
}

Forecast forecast_after(const ModelSpec& spec, const SupervisedSet& history, const SupervisedSet& horizon,
                        const FitOptions& options) {
    if (history.size() == 0 || horizon.size() == 0)
        throw Error(ErrorKind::Empty, "forecast needs history and horizon rows");
    Forecast f{fit_model(spec, history.X, history.y, options.standardize), {}, {}};
    f.model.columns.assign(kInputColumns.begin(), kInputColumns.end());
    const auto& model = f.model;
    f.model_space = recursive_forecast([&model](const Eigen::RowVectorXd& x) { return model.predict_row(x); },
                                       feature_block(horizon), history.y(history.y.size() - 1));
    f.shares = to_levels(f.model_space, history.mode, history.level.back());
    return f;
}

SelectionResult pick_model(std::span<const ModelSpec> specs, const SupervisedSet& train, const SupervisedSet& val,
                           const FitOptions& options) {
    if (specs.empty())
        throw Error(ErrorKind::InvalidArgument, "no model specs to select from");
    if (train.size() == 0 || val.size() == 0)
        throw Error(ErrorKind::Empty, "selection needs training and validation rows");
    SelectionResult result;
    std::optional<std::size_t> best;
    for (const auto& spec : specs) {
        SelectionEntry entry;
        entry.spec = spec;
        try {
            const Forecast f = forecast_after(spec, train, val, options);
            entry.converged = f.model.converged();
            entry.validation_predictions = f.shares;
            const double m = mae(f.shares, val.level);
            if (!std::isfinite(m))
                throw Error(ErrorKind::NotConverged, "non-finite validation predictions");
            entry.validation_mae = m;
        } catch (const Error& e) {
            entry.failure = std::string(to_string(e.kind())) + ": " + e.what();
        }
        result.table.push_back(std::move(entry));
        const auto& added = result.table.back();
        if (added.validation_mae && (!best || *added.validation_mae < *result.table[*best].validation_mae))
            best = result.table.size() - 1;
    }
    if (!best)
        throw Error(ErrorKind::AllModelsFailed, "every model spec failed to fit");
    result.selected = *best;
    return result;
}

void compute_report_metrics(ForecastReport& report) {
    double r2_sum = 0.0;
    for (auto& c : report.candidates) {
        if (c.predictions.empty())
            throw Error(ErrorKind::Empty, "candidate " + c.name + " has no test predictions");
        c.election_day_prediction = c.predictions.back();
        c.r2_vs_polling = r_squared(c.predictions, c.polling);
        r2_sum += c.r2_vs_polling;
    }
    report.mean_r2_vs_polling = r2_sum / 2.0;
    const auto& a = report.candidates[0];
    const auto& b = report.candidates[1];
    report.winner_predicted = b.election_day_prediction > a.election_day_prediction ? Candidate::B : Candidate::A;

    report.winner_correct.reset();
    report.mae_vs_actual.reset();
    report.baseline_mae.reset();
    report.delta_vs_baseline.reset();
    if (a.actual_share && b.actual_share) {
        const Candidate actual_winner = *b.actual_share > *a.actual_share ? Candidate::B : Candidate::A;
        report.winner_correct = actual_winner == report.winner_predicted;
        const std::array<double, 2> pred{a.election_day_prediction, b.election_day_prediction};
        const std::array<double, 2> poll{a.polling.back(), b.polling.back()};
        const std::array<double, 2> actual{*a.actual_share, *b.actual_share};
        report.mae_vs_actual = mae(pred, actual);
        report.baseline_mae = mae(poll, actual);
        report.delta_vs_baseline = *report.mae_vs_actual - *report.baseline_mae;
    }
}

ForecastReport evaluate_test(std::span<const CandidateEvaluation> candidates, const FitOptions& options) {
    if (candidates.size() != 2)
        throw Error(ErrorKind::InvalidArgument, "evaluation needs exactly two candidates");
    if (candidates[0].actual_share.has_value() != candidates[1].actual_share.has_value())
        throw Error(ErrorKind::InvalidArgument, "actual shares must be given for both candidates or neither");
    ForecastReport report;
    for (const auto& in : candidates) {
        const Forecast f = forecast_after(in.spec, in.history, in.test, options);
        CandidateResult& c = report.candidates[index_of(in.candidate)];
        c.candidate = in.candidate;
        c.name = in.name;
        c.model = in.spec.name();
        c.validation_mae = in.validation_mae;
        c.train_rows = in.history.size();
        c.test_dates = in.test.dates;
        c.predictions = f.shares;
        c.polling = in.test.level;
        c.actual_share = in.actual_share;
    }
    compute_report_metrics(report);
    return report;
}

bool report_consistent(const ForecastReport& report) {
    ForecastReport again = report;
    compute_report_metrics(again);
    auto same = [](const std::optional<double>& x, const std::optional<double>& y) {
        return x.has_value() == y.has_value() && (!x || *x == *y);
    };
    for (std::size_t i = 0; i < 2; ++i) {
        if (again.candidates[i].election_day_prediction != report.candidates[i].election_day_prediction ||
            again.candidates[i].r2_vs_polling != report.candidates[i].r2_vs_polling)
            return false;
    }
    return again.winner_predicted == report.winner_predicted && again.winner_correct == report.winner_correct &&
           again.mean_r2_vs_polling == report.mean_r2_vs_polling && same(again.mae_vs_actual, report.mae_vs_actual) &&
           same(again.baseline_mae, report.baseline_mae) && same(again.delta_vs_baseline, report.delta_vs_baseline);
}

}  // namespace ballotwire

#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ballotwire/calendar.hpp"
#include "ballotwire/ingest.hpp"
#include "ballotwire/models.hpp"
#include "ballotwire/supervise.hpp"

namespace ballotwire {

double mae(std::span<const double> predicted, std::span<const double> actual);

/// 1 - SS_res / SS_tot about the reference mean. May be negative.
double r_squared(std::span<const double> predicted, std::span<const double> reference);

struct SelectionEntry {
    ModelSpec spec;
    std::optional<double> validation_mae;  // empty when the fit failed
    std::vector<double> validation_predictions;  // shares
    bool converged = true;
    std::string failure;  // error tag and message of a failed fit
};

struct SelectionResult {
    std::size_t selected = 0;  // index into table
    std::vector<SelectionEntry> table;

    const SelectionEntry& winner() const { return table[selected]; }
};

struct FitOptions {
    bool standardize = false;
};

/// Fits every spec on `train`, forecasts `val` recursively from the last
/// training target and keeps the lowest validation MAE. Earlier specs win
/// ties. Specs whose fit throws are recorded and skipped; AllModelsFailed
/// when none survive.
SelectionResult pick_model(std::span<const ModelSpec> specs, const SupervisedSet& train, const SupervisedSet& val,
                           const FitOptions& options = {});

/// Model fitted on `history` and its recursive forecast over `horizon`,
/// as shares.
struct Forecast {
    FittedModel model;
    std::vector<double> model_space;  // raw predictions (differences in Difference mode)
    std::vector<double> shares;
};

Forecast forecast_after(const ModelSpec& spec, const SupervisedSet& history, const SupervisedSet& horizon,
                        const FitOptions& options = {});

struct CandidateResult {
    Candidate candidate = Candidate::A;
    std::string name;
    std::string model;
    double validation_mae = 0.0;
    std::size_t train_rows = 0;  // rows the final model was refitted on
    std::vector<Date> test_dates;
    std::vector<double> predictions;  // shares
    std::vector<double> polling;      // aggregate polling on the test dates
    double election_day_prediction = 0.0;
    double r2_vs_polling = 0.0;
    std::optional<double> actual_share;
};

struct ForecastReport {
    std::array<CandidateResult, 2> candidates;
    Candidate winner_predicted = Candidate::A;
    std::optional<bool> winner_correct;
    std::optional<double> mae_vs_actual;
    double mean_r2_vs_polling = 0.0;
    std::optional<double> baseline_mae;
    std::optional<double> delta_vs_baseline;
};

/// Recomputes every derived field of `report` from its per-day content and
/// the actual shares. Shared by evaluate_test and report verification.
void compute_report_metrics(ForecastReport& report);

/// Inputs for one candidate's final evaluation.
struct CandidateEvaluation {
    Candidate candidate = Candidate::A;
    std::string name;
    ModelSpec spec;
    double validation_mae = 0.0;
    SupervisedSet history;  // train + validation rows
    SupervisedSet test;
    std::optional<double> actual_share;
};

/// Refits each candidate's selected spec on its history and forecasts the
/// test window. The election-day prediction is the last test-day share; the
/// baseline is the last test-day polling value.
ForecastReport evaluate_test(std::span<const CandidateEvaluation> candidates, const FitOptions& options = {});

/// True when the stored metrics equal a recomputation from the stored
/// per-day values.
bool report_consistent(const ForecastReport& report);

}  // namespace ballotwire

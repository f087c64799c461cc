#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ballotwire {

struct LinearModel {
    Eigen::VectorXd weights;
    double intercept = 0.0;
    bool converged = true;
    bool singular = false;  // ridge fell back to the pseudo-inverse
    int iterations = 0;     // coordinate-descent sweeps; 0 for closed forms
};

enum class KernelKind { Linear, Rbf };

struct KernelSpec {
    KernelKind kind = KernelKind::Rbf;
    double gamma = 1.0;  // rbf only
};

struct SvrModel {
    Eigen::VectorXd dual;  // alpha_i - alpha_i^*, one per training row
    double bias = 0.0;
    KernelSpec kernel;
    Eigen::MatrixXd support;  // training inputs
    double primal_objective = 0.0;
    double dual_objective = 0.0;  // maximization form
    double duality_gap = 0.0;
    int iterations = 0;
};

struct CoordinateDescentOptions {
    double tol = 1e-4;
    int max_iter = 1000;
};

/// min ||y - Xw - b||^2 + lambda ||w||^2, intercept unpenalized.
LinearModel fit_ridge(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, double lambda = 1.0);

/// min (1/2n)||y - Xw - b||^2 + lambda ||w||_1 by cyclic coordinate descent.
LinearModel fit_lasso(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, double lambda = 1.0,
                      const CoordinateDescentOptions& options = {});

/// min (1/2n)||y - Xw - b||^2 + lambda mix ||w||_1 + (lambda (1 - mix) / 2) ||w||^2.
LinearModel fit_elastic_net(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, double lambda = 1.0,
                            double mix = 0.5, const CoordinateDescentOptions& options = {});

/// Largest absolute subgradient-optimality violation of the elastic-net
/// objective at `model`, per coordinate in objective units.
double elastic_net_kkt_residual(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, const LinearModel& model,
                                double lambda, double mix);

struct SvrOptions {
    double C = 1.0;
    double epsilon = 0.1;
    KernelKind kernel = KernelKind::Rbf;
    std::optional<double> gamma;  // rbf; default 1 / (n_features Var(X))
    double gap_tol = 1e-6;
    long max_iter = 1'000'000;
};

SvrModel fit_svr(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, const SvrOptions& options = {});

double rbf_kernel(const Eigen::RowVectorXd& u, const Eigen::RowVectorXd& v, double gamma);
double kernel_value(const KernelSpec& k, const Eigen::RowVectorXd& u, const Eigen::RowVectorXd& v);
Eigen::MatrixXd kernel_matrix(const KernelSpec& k, const Eigen::MatrixXd& A, const Eigen::MatrixXd& B);

/// 1 / (n_features Var(X)) over every entry of X; 1 when X is constant.
double default_gamma(const Eigen::MatrixXd& X);

/// Dual objective 0.5 d'Kd + eps |d|_1 - y'd of an SVR coefficient vector
/// (minimization form).
double svr_dual_objective(const Eigen::MatrixXd& K, const Eigen::VectorXd& y, const Eigen::VectorXd& dual,
                          double epsilon);

Eigen::VectorXd predict(const LinearModel& model, const Eigen::MatrixXd& X);
Eigen::VectorXd predict(const SvrModel& model, const Eigen::MatrixXd& X);

// ---------------------------------------------------------------- registry

enum class ModelKind { Lasso, ElasticNet, Ridge, SvrLinear, SvrRbf };

struct ModelSpec {
    ModelKind kind = ModelKind::Ridge;
    double lambda = 1.0;  // lasso, elastic net, ridge
    double mix = 0.5;     // elastic net
    double C = 1.0;       // svr
    double epsilon = 0.1;
    std::optional<double> gamma;  // svr rbf
    double tol = 1e-4;            // coordinate descent
    int max_iter = 1000;

    std::string name() const;
    void validate() const;  // throws ConfigError
};

std::string_view model_name(ModelKind kind);
std::optional<ModelKind> parse_model_kind(std::string_view name);

/// The five default configurations, in tie-break order.
std::vector<ModelSpec> default_registry();

/// Z-scoring learned on training rows. Constant columns are centred only.
struct Standardizer {
    Eigen::RowVectorXd mean;
    Eigen::RowVectorXd scale;

    static Standardizer fit(const Eigen::MatrixXd& X);
    Eigen::MatrixXd apply(const Eigen::MatrixXd& X) const;
};

struct FittedModel {
    ModelSpec spec;
    std::optional<Standardizer> scaler;
    std::variant<LinearModel, SvrModel> model;
    std::vector<std::string> columns;

    Eigen::VectorXd predict(const Eigen::MatrixXd& X) const;
    double predict_row(const Eigen::RowVectorXd& x) const;
    bool converged() const;
};

FittedModel fit_model(const ModelSpec& spec, const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                      bool standardize = false);

/// JSON text with weights or dual coefficients, hyperparameters, scaler and
/// column order; model_from_json restores a model that predicts identically.
std::string model_to_json(const FittedModel& model);
FittedModel model_from_json(std::string_view text);

}  // namespace ballotwire

#include "ballotwire/models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ballotwire/error.hpp"
#include "json.hpp"

namespace ballotwire {
namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::RowVectorXd;
using Eigen::VectorXd;

void require_finite(const MatrixXd& X, const VectorXd& y) {
    if (X.rows() == 0)
        throw Error(ErrorKind::Empty, "no training rows");
    if (X.rows() != y.size())
        throw Error(ErrorKind::DimensionMismatch, "X has " + std::to_string(X.rows()) + " rows, y has " +
                                                      std::to_string(y.size()));
    if (!X.allFinite() || !y.allFinite())
        throw Error(ErrorKind::InvalidArgument, "training data contains non-finite values");
}

double soft_threshold(double x, double t) {
    if (x > t)
        return x - t;
    if (x < -t)
        return x + t;
    return 0.0;
}

LinearModel coordinate_descent(const MatrixXd& X, const VectorXd& y, double lambda, double mix,
                               const CoordinateDescentOptions& opt) {
    require_finite(X, y);
    if (!(lambda >= 0.0) || !(mix >= 0.0 && mix <= 1.0))
        throw Error(ErrorKind::InvalidArgument, "lambda must be >= 0 and mix in [0, 1]");
    const Index n = X.rows();
    const Index p = X.cols();
    const RowVectorXd xm = X.colwise().mean();
    const double ym = y.mean();
    const MatrixXd Xc = X.rowwise() - xm;
    const double nd = static_cast<double>(n);
    const double l1 = nd * lambda * mix;
    const double l2 = nd * lambda * (1.0 - mix);
    const VectorXd norms = Xc.colwise().squaredNorm();

    LinearModel m;
    m.weights = VectorXd::Zero(p);
    m.converged = false;
    VectorXd r = y.array() - ym;
    for (int it = 1; it <= opt.max_iter; ++it) {
        double max_step = 0.0;
        for (Index j = 0; j < p; ++j) {
            if (norms(j) == 0.0)
                continue;
            const double old = m.weights(j);
            const double rho = Xc.col(j).dot(r) + norms(j) * old;
            const double w = soft_threshold(rho, l1) / (norms(j) + l2);
            if (w != old) {
                r -= (w - old) * Xc.col(j);
                m.weights(j) = w;
            }
            max_step = std::max(max_step, std::fabs(w - old));
        }
        m.iterations = it;
        if (max_step < opt.tol) {
            m.intercept = ym - xm.dot(m.weights);
            if (elastic_net_kkt_residual(X, y, m, lambda, mix) < opt.tol) {
                m.converged = true;
                break;
            }
            // the running residual drifts over many sweeps; refresh it
            r = (y.array() - ym).matrix() - Xc * m.weights;
        }
    }
    m.intercept = ym - xm.dot(m.weights);
    return m;
}

// ---------------------------------------------------------------- SVR

struct SmoState {
    const MatrixXd& K;
    const VectorXd& y;
    double C;
    double eps;
    Index n;
    VectorXd alpha;  // 2n: [alpha; alpha*]
    VectorXd G;

    int z(Index t) const { return t < n ? 1 : -1; }
    double Q(Index s, Index t) const { return z(s) * z(t) * K(s % n, t % n); }
    double QD(Index t) const { return K(t % n, t % n); }
    double p(Index t) const { return t < n ? eps - y(t) : eps + y(t - n); }
    bool at_upper(Index t) const { return alpha(t) >= C; }
    bool at_lower(Index t) const { return alpha(t) <= 0.0; }

    void refresh_gradient() {
        for (Index t = 0; t < 2 * n; ++t) {
            double g = p(t);
            for (Index s = 0; s < 2 * n; ++s)
                if (alpha(s) != 0.0)
                    g += Q(t, s) * alpha(s);
            G(t) = g;
        }
    }

    // second-order working set selection; false when the KKT gap is below tol
    bool select(double tol, Index& out_i, Index& out_j) const {
        constexpr double tau = 1e-12;
        double gmax = -std::numeric_limits<double>::infinity();
        Index i = -1;
        for (Index t = 0; t < 2 * n; ++t) {
            if (z(t) == 1) {
                if (!at_upper(t) && -G(t) >= gmax) {
                    gmax = -G(t);
                    i = t;
                }
            } else if (!at_lower(t) && G(t) >= gmax) {
                gmax = G(t);
                i = t;
            }
        }
        double gmax2 = -std::numeric_limits<double>::infinity();
        double best = std::numeric_limits<double>::infinity();
        Index j = -1;
        for (Index t = 0; t < 2 * n; ++t) {
            if (z(t) == 1) {
                if (at_lower(t))
                    continue;
                const double diff = gmax + G(t);
                gmax2 = std::max(gmax2, G(t));
                if (diff > 0 && i >= 0) {
                    double quad = QD(i) + QD(t) - 2.0 * z(i) * Q(i, t);
                    const double obj = -(diff * diff) / (quad > 0 ? quad : tau);
                    if (obj <= best) {
                        best = obj;
                        j = t;
                    }
                }
            } else {
                if (at_upper(t))
                    continue;
                const double diff = gmax - G(t);
                gmax2 = std::max(gmax2, -G(t));
                if (diff > 0 && i >= 0) {
                    double quad = QD(i) + QD(t) + 2.0 * z(i) * Q(i, t);
                    const double obj = -(diff * diff) / (quad > 0 ? quad : tau);
                    if (obj <= best) {
                        best = obj;
                        j = t;
                    }
                }
            }
        }
        if (gmax + gmax2 < tol || i < 0 || j < 0)
            return false;
        out_i = i;
        out_j = j;
        return true;
    }

    void update(Index i, Index j) {
        constexpr double tau = 1e-12;
        const double old_i = alpha(i);
        const double old_j = alpha(j);
        double& ai = alpha(i);
        double& aj = alpha(j);
        if (z(i) != z(j)) {
            double quad = QD(i) + QD(j) + 2.0 * Q(i, j);
            if (quad <= 0)
                quad = tau;
            const double delta = (-G(i) - G(j)) / quad;
            const double diff = ai - aj;
            ai += delta;
            aj += delta;
            if (diff > 0) {
                if (aj < 0) {
                    aj = 0;
                    ai = diff;
                }
            } else if (ai < 0) {
                ai = 0;
                aj = -diff;
            }
            if (diff > 0) {
                if (ai > C) {
                    ai = C;
                    aj = C - diff;
                }
            } else if (aj > C) {
                aj = C;
                ai = C + diff;
            }
        } else {
            double quad = QD(i) + QD(j) - 2.0 * Q(i, j);
            if (quad <= 0)
                quad = tau;
            const double delta = (G(i) - G(j)) / quad;
            const double sum = ai + aj;
            ai -= delta;
            aj += delta;
            if (sum > C) {
                if (ai > C) {
                    ai = C;
                    aj = sum - C;
                }
            } else if (aj < 0) {
                aj = 0;
                ai = sum;
            }
            if (sum > C) {
                if (aj > C) {
                    aj = C;
                    ai = sum - C;
                }
            } else if (ai < 0) {
                ai = 0;
                aj = sum;
            }
        }
        const double di = ai - old_i;
        const double dj = aj - old_j;
        for (Index t = 0; t < 2 * n; ++t)
            G(t) += Q(t, i) * di + Q(t, j) * dj;
    }

    // average of z G over free variables, else the midpoint of the feasible interval
    double rho() const {
        double ub = std::numeric_limits<double>::infinity();
        double lb = -std::numeric_limits<double>::infinity();
        double sum_free = 0.0;
        int n_free = 0;
        for (Index t = 0; t < 2 * n; ++t) {
            const double zg = z(t) * G(t);
            if (at_upper(t)) {
                if (z(t) == -1)
                    ub = std::min(ub, zg);
                else
                    lb = std::max(lb, zg);
            } else if (at_lower(t)) {
                if (z(t) == 1)
                    ub = std::min(ub, zg);
                else
                    lb = std::max(lb, zg);
            } else {
                ++n_free;
                sum_free += zg;
            }
        }
        return n_free > 0 ? sum_free / n_free : (ub + lb) / 2.0;
    }
};

// min over b of sum max(0, |e_i - b| - eps); the minimum sits on a breakpoint
double best_hinge_total(const VectorXd& e, double eps) {
    auto total = [&](double b) {
        double s = 0.0;
        for (Index i = 0; i < e.size(); ++i)
            s += std::max(0.0, std::fabs(e(i) - b) - eps);
        return s;
    };
    double best = std::numeric_limits<double>::infinity();
    for (Index i = 0; i < e.size(); ++i)
        best = std::min({best, total(e(i) - eps), total(e(i) + eps)});
    return best;
}

}  // namespace

LinearModel fit_ridge(const MatrixXd& X, const VectorXd& y, double lambda) {
    require_finite(X, y);
    if (!(lambda >= 0.0))
        throw Error(ErrorKind::InvalidArgument, "ridge lambda must be >= 0");
    const RowVectorXd xm = X.colwise().mean();
    const double ym = y.mean();
    const MatrixXd Xc = X.rowwise() - xm;
    const VectorXd yc = y.array() - ym;
    MatrixXd A = Xc.transpose() * Xc;
    A.diagonal().array() += lambda;
    const VectorXd rhs = Xc.transpose() * yc;

    LinearModel m;
    Eigen::CompleteOrthogonalDecomposition<MatrixXd> cod(A);
    if (cod.rank() < A.cols()) {
        m.singular = true;
        m.weights = cod.solve(rhs);
    } else {
        m.weights = A.ldlt().solve(rhs);
    }
    m.intercept = ym - xm.dot(m.weights);
    return m;
}

LinearModel fit_lasso(const MatrixXd& X, const VectorXd& y, double lambda, const CoordinateDescentOptions& options) {
    return coordinate_descent(X, y, lambda, 1.0, options);
}

LinearModel fit_elastic_net(const MatrixXd& X, const VectorXd& y, double lambda, double mix,
                            const CoordinateDescentOptions& options) {
    return coordinate_descent(X, y, lambda, mix, options);
}

double elastic_net_kkt_residual(const MatrixXd& X, const VectorXd& y, const LinearModel& model, double lambda,
                                double mix) {
    const VectorXd r = y - X * model.weights - VectorXd::Constant(y.size(), model.intercept);
    const RowVectorXd xm = X.colwise().mean();
    const double n = static_cast<double>(X.rows());
    double worst = 0.0;
    for (Index j = 0; j < X.cols(); ++j) {
        const double g = (X.col(j).array() - xm(j)).matrix().dot(r) / n - lambda * (1.0 - mix) * model.weights(j);
        const double l1 = lambda * mix;
        const double w = model.weights(j);
        const double v = w != 0.0 ? std::fabs(g - l1 * (w > 0 ? 1.0 : -1.0)) : std::max(0.0, std::fabs(g) - l1);
        worst = std::max(worst, v);
    }
    return worst;
}

double rbf_kernel(const RowVectorXd& u, const RowVectorXd& v, double gamma) {
    if (u.size() != v.size())
        throw Error(ErrorKind::DimensionMismatch, "kernel arguments differ in length");
    if (!(gamma > 0.0))
        throw Error(ErrorKind::InvalidArgument, "rbf gamma must be positive");
    return std::exp(-gamma * (u - v).squaredNorm());
}

double kernel_value(const KernelSpec& k, const RowVectorXd& u, const RowVectorXd& v) {
    if (k.kind == KernelKind::Linear) {
        if (u.size() != v.size())
            throw Error(ErrorKind::DimensionMismatch, "kernel arguments differ in length");
        return u.dot(v);
    }
    return rbf_kernel(u, v, k.gamma);
}

MatrixXd kernel_matrix(const KernelSpec& k, const MatrixXd& A, const MatrixXd& B) {
    if (A.cols() != B.cols())
        throw Error(ErrorKind::DimensionMismatch, "kernel inputs differ in width");
    MatrixXd out(A.rows(), B.rows());
    for (Index i = 0; i < A.rows(); ++i)
        for (Index j = 0; j < B.rows(); ++j)
            out(i, j) = kernel_value(k, A.row(i), B.row(j));
    return out;
}

double default_gamma(const MatrixXd& X) {
    const double mean = X.mean();
    const double var = (X.array() - mean).square().mean();
    if (!(var > 0.0))
        return 1.0;
    return 1.0 / (static_cast<double>(X.cols()) * var);
}

double svr_dual_objective(const MatrixXd& K, const VectorXd& y, const VectorXd& dual, double epsilon) {
    return 0.5 * dual.dot(K * dual) + epsilon * dual.lpNorm<1>() - y.dot(dual);
}

SvrModel fit_svr(const MatrixXd& X, const VectorXd& y, const SvrOptions& opt) {
    require_finite(X, y);
    if (X.rows() < 2)
        throw Error(ErrorKind::InvalidArgument, "SVR needs at least 2 rows");
    if (!(opt.C > 0.0) || !(opt.epsilon >= 0.0))
        throw Error(ErrorKind::InvalidArgument, "SVR needs C > 0 and epsilon >= 0");
    bool identical = true;
    for (Index i = 1; i < X.rows() && identical; ++i)
        identical = X.row(i) == X.row(0);
    if (identical)
        throw Error(ErrorKind::DegenerateKernel, "all training rows are identical");

    SvrModel m;
    m.kernel.kind = opt.kernel;
    if (opt.kernel == KernelKind::Rbf) {
        m.kernel.gamma = opt.gamma.value_or(default_gamma(X));
        if (!(m.kernel.gamma > 0.0))
            throw Error(ErrorKind::InvalidArgument, "rbf gamma must be positive");
    }
    const Index n = X.rows();
    const MatrixXd K = kernel_matrix(m.kernel, X, X);
    if (!K.allFinite())
        throw Error(ErrorKind::DegenerateKernel, "kernel matrix is not finite");

    SmoState s{K, y, opt.C, opt.epsilon, n, VectorXd::Zero(2 * n), VectorXd::Zero(2 * n)};
    s.refresh_gradient();

    long iter = 0;
    double kkt_tol = 1e-3;
    bool done = false;
    while (!done) {
        Index i = 0, j = 0;
        while (iter < opt.max_iter && s.select(kkt_tol, i, j)) {
            s.update(i, j);
            ++iter;
        }
        s.refresh_gradient();

        m.dual = s.alpha.head(n) - s.alpha.tail(n);
        m.bias = -s.rho();
        const VectorXd g = K * m.dual;
        const double quad = 0.5 * m.dual.dot(g);
        m.primal_objective = quad + opt.C * best_hinge_total(y - g, opt.epsilon);
        m.dual_objective = -(quad + opt.epsilon * s.alpha.sum() - y.dot(m.dual));
        m.duality_gap = m.primal_objective - m.dual_objective;
        if (m.duality_gap <= opt.gap_tol) {
            done = true;
        } else if (iter >= opt.max_iter || kkt_tol < 1e-15) {
            throw Error(ErrorKind::NotConverged, "SVR duality gap " + std::to_string(m.duality_gap) +
                                                     " above tolerance after " + std::to_string(iter) +
                                                     " iterations");
        } else {
            kkt_tol /= 10.0;
        }
    }
    m.iterations = static_cast<int>(iter);
    m.support = X;
    return m;
}

VectorXd predict(const LinearModel& model, const MatrixXd& X) {
    if (X.cols() != model.weights.size())
        throw Error(ErrorKind::DimensionMismatch, "model expects " + std::to_string(model.weights.size()) +
                                                      " columns, got " + std::to_string(X.cols()));
    return (X * model.weights).array() + model.intercept;
}

VectorXd predict(const SvrModel& model, const MatrixXd& X) {
    if (X.cols() != model.support.cols())
        throw Error(ErrorKind::DimensionMismatch, "model expects " + std::to_string(model.support.cols()) +
                                                      " columns, got " + std::to_string(X.cols()));
    return (kernel_matrix(model.kernel, X, model.support) * model.dual).array() + model.bias;
}

// ---------------------------------------------------------------- registry

std::string_view model_name(ModelKind kind) {
    switch (kind) {
    case ModelKind::Lasso: return "lasso";
    case ModelKind::ElasticNet: return "elastic_net";
    case ModelKind::Ridge: return "ridge";
    case ModelKind::SvrLinear: return "svr_linear";
    case ModelKind::SvrRbf: return "svr_rbf";
    }
    return "unknown";
}

std::optional<ModelKind> parse_model_kind(std::string_view name) {
    for (ModelKind k : {ModelKind::Lasso, ModelKind::ElasticNet, ModelKind::Ridge, ModelKind::SvrLinear,
                        ModelKind::SvrRbf})
        if (model_name(k) == name)
            return k;
    return std::nullopt;
}

std::string ModelSpec::name() const { return std::string(model_name(kind)); }

void ModelSpec::validate() const {
    auto bad = [this](const std::string& what) {
        throw Error(ErrorKind::ConfigError, name() + ": " + what);
    };
    if (!(lambda >= 0.0) || !std::isfinite(lambda))
        bad("lambda must be a finite value >= 0");
    if (!(mix >= 0.0 && mix <= 1.0))
        bad("mix must lie in [0, 1]");
    if (!(C > 0.0) || !std::isfinite(C))
        bad("C must be a finite value > 0");
    if (!(epsilon >= 0.0) || !std::isfinite(epsilon))
        bad("epsilon must be a finite value >= 0");
    if (gamma && !(*gamma > 0.0))
        bad("gamma must be > 0");
    if (!(tol > 0.0))
        bad("tol must be > 0");
    if (max_iter < 1)
        bad("max_iter must be >= 1");
}

std::vector<ModelSpec> default_registry() {
    std::vector<ModelSpec> out;
    for (ModelKind k : {ModelKind::Lasso, ModelKind::ElasticNet, ModelKind::Ridge, ModelKind::SvrLinear,
                        ModelKind::SvrRbf}) {
        ModelSpec s;
        s.kind = k;
        out.push_back(s);
    }
    return out;
}

Standardizer Standardizer::fit(const MatrixXd& X) {
    if (X.rows() == 0)
        throw Error(ErrorKind::Empty, "cannot standardize zero rows");
    Standardizer s;
    s.mean = X.colwise().mean();
    s.scale = ((X.rowwise() - s.mean).array().square().colwise().mean()).sqrt();
    for (Index j = 0; j < s.scale.size(); ++j)
        if (!(s.scale(j) > 0.0))
            s.scale(j) = 1.0;
    return s;
}

MatrixXd Standardizer::apply(const MatrixXd& X) const {
    if (X.cols() != mean.size())
        throw Error(ErrorKind::DimensionMismatch, "standardizer width mismatch");
    return (X.rowwise() - mean).array().rowwise() / scale.array();
}

VectorXd FittedModel::predict(const MatrixXd& X) const {
    const MatrixXd Z = scaler ? scaler->apply(X) : X;
    return std::visit([&](const auto& m) { return ballotwire::predict(m, Z); }, model);
}

double FittedModel::predict_row(const RowVectorXd& x) const { return predict(MatrixXd(x))(0); }

bool FittedModel::converged() const {
    if (const auto* lin = std::get_if<LinearModel>(&model))
        return lin->converged;
    return true;
}

FittedModel fit_model(const ModelSpec& spec, const MatrixXd& X, const VectorXd& y, bool standardize) {
    spec.validate();
    require_finite(X, y);
    FittedModel out;
    out.spec = spec;
    MatrixXd Z = X;
    if (standardize) {
        out.scaler = Standardizer::fit(X);
        Z = out.scaler->apply(X);
    }
    const CoordinateDescentOptions cd{spec.tol, spec.max_iter};
    switch (spec.kind) {
    case ModelKind::Lasso: out.model = fit_lasso(Z, y, spec.lambda, cd); break;
    case ModelKind::ElasticNet: out.model = fit_elastic_net(Z, y, spec.lambda, spec.mix, cd); break;
    case ModelKind::Ridge: out.model = fit_ridge(Z, y, spec.lambda); break;
    case ModelKind::SvrLinear:
    case ModelKind::SvrRbf: {
        SvrOptions o;
        o.C = spec.C;
        o.epsilon = spec.epsilon;
        o.kernel = spec.kind == ModelKind::SvrLinear ? KernelKind::Linear : KernelKind::Rbf;
        o.gamma = spec.gamma;
        out.model = fit_svr(Z, y, o);
        break;
    }
    }
    return out;
}

// ---------------------------------------------------------------- JSON

namespace {

using nlohmann::json;

json to_json(const VectorXd& v) { return std::vector<double>(v.data(), v.data() + v.size()); }
json to_json(const RowVectorXd& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

VectorXd vector_from(const json& j) {
    const auto v = j.get<std::vector<double>>();
    return Eigen::Map<const VectorXd>(v.data(), static_cast<Index>(v.size()));
}

}  // namespace

std::string model_to_json(const FittedModel& fm) {
    json j;
    j["model"] = fm.spec.name();
    j["columns"] = fm.columns;
    json hp;
    hp["lambda"] = fm.spec.lambda;
    hp["mix"] = fm.spec.mix;
    hp["C"] = fm.spec.C;
    hp["epsilon"] = fm.spec.epsilon;
    hp["gamma"] = fm.spec.gamma ? json(*fm.spec.gamma) : json(nullptr);
    hp["tol"] = fm.spec.tol;
    hp["max_iter"] = fm.spec.max_iter;
    j["hyperparameters"] = hp;
    if (fm.scaler)
        j["standardizer"] = {{"mean", to_json(fm.scaler->mean)}, {"scale", to_json(fm.scaler->scale)}};
    else
        j["standardizer"] = nullptr;
    if (const auto* lin = std::get_if<LinearModel>(&fm.model)) {
        j["linear"] = {{"weights", to_json(lin->weights)},
                       {"intercept", lin->intercept},
                       {"converged", lin->converged},
                       {"singular", lin->singular},
                       {"iterations", lin->iterations}};
    } else {
        const auto& svr = std::get<SvrModel>(fm.model);
        json rows = json::array();
        for (Index i = 0; i < svr.support.rows(); ++i)
            rows.push_back(to_json(RowVectorXd(svr.support.row(i))));
        j["svr"] = {{"dual", to_json(svr.dual)},
                    {"bias", svr.bias},
                    {"kernel", svr.kernel.kind == KernelKind::Linear ? "linear" : "rbf"},
                    {"gamma", svr.kernel.gamma},
                    {"support", rows},
                    {"primal_objective", svr.primal_objective},
                    {"dual_objective", svr.dual_objective},
                    {"duality_gap", svr.duality_gap},
                    {"iterations", svr.iterations}};
    }
    return j.dump(2) + "\n";
}

FittedModel model_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::MalformedRow, std::string("model JSON: ") + e.what());
    }
    try {
        FittedModel fm;
        const auto kind = parse_model_kind(j.at("model").get<std::string>());
        if (!kind)
            throw Error(ErrorKind::MalformedRow, "model JSON: unknown model " + j.at("model").dump());
        fm.spec.kind = *kind;
        const auto& hp = j.at("hyperparameters");
        fm.spec.lambda = hp.at("lambda").get<double>();
        fm.spec.mix = hp.at("mix").get<double>();
        fm.spec.C = hp.at("C").get<double>();
        fm.spec.epsilon = hp.at("epsilon").get<double>();
        if (!hp.at("gamma").is_null())
            fm.spec.gamma = hp.at("gamma").get<double>();
        fm.spec.tol = hp.at("tol").get<double>();
        fm.spec.max_iter = hp.at("max_iter").get<int>();
        fm.columns = j.at("columns").get<std::vector<std::string>>();
        if (!j.at("standardizer").is_null()) {
            Standardizer s;
            s.mean = vector_from(j["standardizer"].at("mean")).transpose();
            s.scale = vector_from(j["standardizer"].at("scale")).transpose();
            fm.scaler = s;
        }
        if (j.contains("linear")) {
            const auto& l = j["linear"];
            LinearModel m;
            m.weights = vector_from(l.at("weights"));
            m.intercept = l.at("intercept").get<double>();
            m.converged = l.at("converged").get<bool>();
            m.singular = l.at("singular").get<bool>();
            m.iterations = l.at("iterations").get<int>();
            fm.model = m;
        } else {
            const auto& s = j.at("svr");
            SvrModel m;
            m.dual = vector_from(s.at("dual"));
            m.bias = s.at("bias").get<double>();
            m.kernel.kind = s.at("kernel").get<std::string>() == "linear" ? KernelKind::Linear : KernelKind::Rbf;
            m.kernel.gamma = s.at("gamma").get<double>();
            const auto rows = s.at("support").get<std::vector<std::vector<double>>>();
            m.support.resize(static_cast<Index>(rows.size()), rows.empty() ? 0 : static_cast<Index>(rows[0].size()));
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t k = 0; k < rows[i].size(); ++k)
                    m.support(static_cast<Index>(i), static_cast<Index>(k)) = rows[i][k];
            m.primal_objective = s.at("primal_objective").get<double>();
            m.dual_objective = s.at("dual_objective").get<double>();
            m.duality_gap = s.at("duality_gap").get<double>();
            m.iterations = s.at("iterations").get<int>();
            fm.model = m;
        }
        return fm;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::MalformedRow, std::string("model JSON: ") + e.what());
    }
}

}  // namespace ballotwire

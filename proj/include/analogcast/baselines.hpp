#pragma once

#include "analogcast/dataset.hpp"
#include "analogcast/forecast.hpp"
#include "analogcast/metrics.hpp"
#include "analogcast/random.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace analogcast {

// x(t+1) = mu + a x(t) + sigma e(t)
struct ARModel {
    double mu = 0.0;
    double a = 0.0;
    double sigma = 0.0;
};

ARModel fit_stationary_ar(const Eigen::VectorXd& x);

// 2p - 2 ln L with p = 3 and the Gaussian likelihood of the residuals.
double stationary_ar_aic(const ARModel& model, const Eigen::VectorXd& x);

struct ClusterARModel {
    std::vector<ARModel> clusters;
    // gamma[t] in 0..K-1 selects the coefficients of the step t -> t+1
    // (files and reports use 1..K).
    std::vector<int> gamma;
    std::size_t switch_budget = 0;
    Eigen::MatrixXd transition;
    double objective = 0.0; // total squared one-step residual
    double aic = 0.0;
    std::vector<double> objective_history; // one entry per affiliation update

    std::size_t K() const { return clusters.size(); }
    std::size_t switches() const;
};

struct ClusterFitOptions {
    std::size_t restarts = 10;
    std::size_t max_iterations = 200;
    std::uint64_t seed = 0;
};

ClusterARModel fit_cluster_ar(const Eigen::VectorXd& x, std::size_t K, std::size_t C, const ClusterFitOptions& opt = {});

// Per-cluster least squares for a fixed affiliation.
std::vector<ARModel> fit_cluster_coefficients(const Eigen::VectorXd& x, const std::vector<int>& gamma, std::size_t K);

// Affiliation minimizing the total squared residual under at most C switches.
std::vector<int> optimal_affiliation(const Eigen::VectorXd& x, const std::vector<ARModel>& clusters, std::size_t C);

double cluster_objective(const Eigen::VectorXd& x, const std::vector<int>& gamma, const std::vector<ARModel>& clusters);
double cluster_aic(const Eigen::VectorXd& x, const std::vector<int>& gamma, const std::vector<ARModel>& clusters);

// T_ij = N_ij / sum_k N_ik from the direct transitions in gamma.
Eigen::MatrixXd estimate_transition_matrix(const std::vector<int>& gamma, std::size_t K);

enum class AffiliationMode { DeterministicPi, Realization };

struct AffiliationForecast {
    AffiliationMode mode = AffiliationMode::DeterministicPi;
    std::vector<Eigen::VectorXd> pi; // pi[s] for s = 0..tau_max
    std::vector<int> realization;    // Gamma_R(s), realization mode only
    std::uint64_t seed = 0;
};

// pi0 T^tau
Eigen::VectorXd predict_affiliation_deterministic(const Eigen::VectorXd& pi0, const Eigen::MatrixXd& T, std::size_t tau);
AffiliationForecast affiliation_path(const Eigen::VectorXd& pi0, const Eigen::MatrixXd& T, std::size_t tau_max);
// Markov chain sample path Gamma_R(0..tau_max) started from a draw of pi0.
std::vector<int> predict_affiliation_realization(const Eigen::VectorXd& pi0, const Eigen::MatrixXd& T,
                                                 std::size_t tau_max, std::uint64_t seed);

// Cluster whose one-step model best explains x0 given its predecessor; without
// a predecessor, the cluster with the nearest stationary mean.
int initial_cluster(const ClusterARModel& model, double x0, std::optional<double> x_prev);

// Trajectory x(0..steps). Without an rng the noise is off (conditional mean).
Eigen::VectorXd ar_forecast(const ARModel& model, double x0, std::size_t steps, Rng* rng = nullptr);

enum class AffiliationScheme { Fixed, DeterministicPi, Realization };
// Coefficients: blend (mu, A) by pi before each step. Predictions: blend the
// per-cluster trajectories by pi.
enum class Blend { Coefficients, Predictions };

struct ClusterForecastOptions {
    AffiliationScheme scheme = AffiliationScheme::DeterministicPi;
    Blend blend = Blend::Coefficients;
    std::uint64_t seed = 0;
};

Eigen::VectorXd cluster_ar_forecast(const ClusterARModel& model, double x0, std::optional<double> x_prev,
                                    std::size_t steps, const ClusterForecastOptions& opt, std::uint64_t stream = 0);

std::string method_name(AffiliationScheme scheme);

// Noise-off forecasts from every test sample; one model step per sample.
ForecastRun run_ar_forecast(const ARModel& model, const ScalarObservable& test, const std::vector<std::int64_t>& leads,
                            std::int64_t dt);
ForecastRun run_cluster_forecast(const ClusterARModel& model, const ScalarObservable& test,
                                 const std::vector<std::int64_t>& leads, std::int64_t dt,
                                 const ClusterForecastOptions& opt);

// Forecasts over the training record driven by the fitted affiliation itself.
SkillCurves potential_predictability(const ClusterARModel& model, const Eigen::VectorXd& x,
                                     const std::vector<std::int64_t>& leads, std::int64_t dt);

struct AICCell {
    std::size_t K = 0;
    std::size_t C = 0;
    std::optional<double> aic; // empty when infeasible (C < K - 1) or the fit failed
    std::size_t switches = 0;
    std::string note;
};

struct AICSelection {
    std::size_t K = 0;
    std::size_t C = 0;
    std::vector<AICCell> table;
    ClusterARModel model;
};

// Grid cells are independent and run on `threads` workers (0: hardware concurrency).
AICSelection aic_select(const Eigen::VectorXd& x, const std::vector<std::size_t>& Ks,
                        const std::vector<std::size_t>& Cs, const ClusterFitOptions& opt = {}, std::size_t threads = 1);

void write_aic_csv(const AICSelection& sel, const std::filesystem::path& path, const std::string& header_comment);

// Plain-text key = value model files; gamma is run-length encoded, 1-based.
void save_cluster_model(const ClusterARModel& model, const std::filesystem::path& path, const std::string& header_comment);
ClusterARModel load_cluster_model(const std::filesystem::path& path);
void save_ar_model(const ARModel& model, const std::filesystem::path& path, const std::string& header_comment);
ARModel load_ar_model(const std::filesystem::path& path);

} // namespace analogcast

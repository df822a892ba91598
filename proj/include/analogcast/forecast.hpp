#pragma once

#include "analogcast/embedding.hpp"
#include "analogcast/ose.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace analogcast {

// S_tau f on training samples: values f(x_{k+tau}) for k < n - tau; samples
// whose image leaves the record are marked invalid.
struct Shifted {
    Eigen::VectorXd values; // length n - tau
    std::vector<bool> valid; // length n
};

Shifted shift(const Eigen::VectorXd& f, std::size_t tau_samples);

// Keeps the nN largest weights (ties: earlier index wins), zeroes the rest and
// renormalizes. nN = 0 or nN >= size leaves the distribution unchanged.
Eigen::VectorXd truncate_ensemble(const Eigen::VectorXd& weights, std::size_t n_neighbors);

// Everything one ensemble forecast touched; used to audit convexity and
// record bounds.
struct EnsembleTrace {
    double prediction = 0.0;
    std::vector<Eigen::Index> support;  // training indices k with nonzero weight
    std::size_t valid_analogs = 0;      // n - tau
    std::size_t excluded_analogs = 0;   // tau
    Eigen::Index max_index_read = -1;   // largest k + tau read
    double envelope_min = 0.0;          // convex-hull bound on the prediction
    double envelope_max = 0.0;
};

// Lead in months -> lead in samples; must be a non-negative multiple of dt.
std::size_t lead_samples(std::int64_t lead_months, std::int64_t dt);

class KeafGH {
public:
    KeafGH(const GHModel& model, const EmbeddedSeries& test);

    EnsembleTrace predict(Eigen::Index test_index, std::size_t tau_samples, std::size_t n_neighbors) const;
    Eigen::Index test_samples() const { return kernel_.rows(); }

private:
    const GHModel* model_;
    OutOfSampleKernel kernel_;
};

class KeafLP {
public:
    KeafLP(const LPModel& model, const EmbeddedSeries& test);

    EnsembleTrace predict(Eigen::Index test_index, std::size_t tau_samples, std::size_t n_neighbors) const;
    Eigen::Index test_samples() const { return static_cast<Eigen::Index>(samples_); }

private:
    const LPModel* model_;
    std::vector<OutOfSampleKernel> levels_;
    std::size_t samples_ = 0;
};

struct ExcludedAnalogs {
    std::int64_t lead = 0;
    std::size_t excluded = 0;      // training samples whose image leaves the record
    Eigen::Index max_index_read = -1;
};

struct ForecastRun {
    std::string method;
    std::vector<std::int64_t> leads;              // months
    std::vector<std::int64_t> initial_timestamps; // one per test sample
    Eigen::MatrixXd predictions;                  // n' x leads
    Eigen::MatrixXd truth;                        // same shape, NaN where unavailable; may be empty
    std::string truth_mode;
    std::map<std::string, std::string> parameters;
    std::vector<ExcludedAnalogs> excluded;
};

ForecastRun run_keaf_gh(const GHModel& model, const EmbeddedSeries& test, const std::vector<std::int64_t>& leads,
                        std::size_t n_neighbors);
ForecastRun run_keaf_lp(const LPModel& model, const EmbeddedSeries& test, const std::vector<std::int64_t>& leads,
                        std::size_t n_neighbors);
// f(y, tau) = f(y, 0) for every lead.
ForecastRun run_persistence(const Eigen::VectorXd& initial_values, const std::vector<std::int64_t>& timestamps,
                            const std::vector<std::int64_t>& leads);

// Long-format CSV: init_month,lead,prediction,truth,method (truth may be empty).
void write_forecast_csv(const ForecastRun& run, const std::filesystem::path& path, const std::string& header_comment);
void append_forecast_csv(const ForecastRun& run, std::ostream& out);
std::vector<ForecastRun> read_forecast_csv(const std::filesystem::path& path);

// FCST binary mirror.
void save_forecast_run(const ForecastRun& run, const std::filesystem::path& path);
ForecastRun load_forecast_run(const std::filesystem::path& path);

} // namespace analogcast

#pragma once

#include "analogcast/embedding.hpp"
#include "analogcast/kernels.hpp"
#include "analogcast/laplacian.hpp"

#include <Eigen/Dense>

#include <filesystem>
#include <memory>
#include <optional>
#include <vector>

namespace analogcast {

// Kernel eigenvalue 1 - lambda below which a geometric harmonic is not extended.
inline constexpr double kConditioningFloor = 1e-6;

// Kernel between new points (rows) and training samples (columns), kept in
// exponent form: weight ~ exp(-(exponents(i, k) + column_offset(k))).
struct OutOfSampleKernel {
    Eigen::MatrixXd exponents;
    Eigen::VectorXd column_offset;

    Eigen::Index rows() const { return exponents.rows(); }
    Eigen::Index cols() const { return exponents.cols(); }

    // Row-normalized weights of row i over training samples [0, valid).
    Eigen::VectorXd weights(Eigen::Index i, Eigen::Index valid) const;
    Eigen::MatrixXd weights() const;
};

// W(y, x_k) proportional to K(y, x_k) / Q_k^alpha. For y = x_k this reproduces
// row k of the Markov matrix P, for every alpha.
OutOfSampleKernel extension_kernel(const EmbeddedSeries& test, const EmbeddedSeries& train, const KernelSpec& spec,
                                   const EigenBasis& basis);
OutOfSampleKernel extension_kernel(const SquaredDistances& dist, const EmbeddedSeries& test,
                                   const EmbeddedSeries& train, const KernelSpec& spec, const EigenBasis& basis);

struct GHModel {
    std::shared_ptr<const EigenBasis> basis;
    std::shared_ptr<const EmbeddedSeries> training;
    KernelSpec spec;
    std::size_t truncation = 0;
    Eigen::VectorXd coefficients; // <phi_j, f>, j < truncation
    double residual = 0.0;        // |f - sum_j c_j phi_j| over training samples
    Eigen::VectorXd nystrom;      // sum_j c_j phi_j / (1 - lambda_j) on training samples
};

// Smallest l with 1 - lambda_l < 1e-3 (1 - lambda_2), minus one; never past the
// conditioning floor. Falls back to every available mode.
std::size_t default_truncation(const EigenBasis& basis);

GHModel gh_fit(const Eigen::VectorXd& f, std::shared_ptr<const EigenBasis> basis,
               std::shared_ptr<const EmbeddedSeries> training, const KernelSpec& spec,
               std::optional<std::size_t> truncation = std::nullopt);

// (1 / (1 - lambda_j)) sum_k W(y, x_k) phi_j(x_k) for every row of W.
Eigen::VectorXd gh_extend_eigenfunction(const EigenBasis& basis, std::size_t j, const Eigen::MatrixXd& weights);

Eigen::VectorXd gh_extend(const GHModel& model, const Eigen::MatrixXd& weights);
Eigen::VectorXd gh_extend(const GHModel& model, const EmbeddedSeries& test);

struct LPLevel {
    KernelSpec spec;
    Eigen::VectorXd residual; // d_l on training samples, d_0 = f
};

struct LPModel {
    std::shared_ptr<const EmbeddedSeries> training;
    std::vector<LPLevel> levels;
    double tolerance = 0.0;
    double training_error = 0.0;
    std::vector<double> error_history; // |f - sum_{k<=l} s_k| after each level
};

inline constexpr std::size_t kDefaultMaxLevel = 12;

// Multiscale fit with bandwidth halving per level until the training error
// drops below `tolerance` (default 1e-6 |f|).
LPModel lp_fit(const Eigen::VectorXd& f, std::shared_ptr<const EmbeddedSeries> training, const KernelSpec& base,
               std::optional<double> tolerance = std::nullopt, std::size_t max_level = kDefaultMaxLevel);
LPModel lp_fit(const Eigen::VectorXd& f, std::shared_ptr<const EmbeddedSeries> training, const SquaredDistances& dist,
               const KernelSpec& base, std::optional<double> tolerance = std::nullopt,
               std::size_t max_level = kDefaultMaxLevel);

Eigen::VectorXd lp_extend(const LPModel& model, const EmbeddedSeries& test);
Eigen::VectorXd lp_extend(const LPModel& model, const SquaredDistances& dist, const EmbeddedSeries& test);

// GHMD / LPMD files. A loaded model is re-bound to its basis and training
// series; the stored hashes must match.
void save_gh_model(const GHModel& model, const std::filesystem::path& path);
GHModel load_gh_model(const std::filesystem::path& path, std::shared_ptr<const EigenBasis> basis,
                      std::shared_ptr<const EmbeddedSeries> training);
void save_lp_model(const LPModel& model, const std::filesystem::path& path);
LPModel load_lp_model(const std::filesystem::path& path, std::shared_ptr<const EmbeddedSeries> training);

} // namespace analogcast

#pragma once

#include "analogcast/kernels.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <filesystem>
#include <string>

namespace analogcast {

struct NormalizedKernel {
    Eigen::MatrixXd values; // K~_ij = K_ij / (Q_i^a Q_j^a)
    Eigen::VectorXd q;      // Q_i = sum_j K_ij
    double alpha = 0.0;
};

NormalizedKernel normalize(const KernelMatrix& k, double alpha);

struct MarkovLaplacian {
    Eigen::MatrixXd markov;    // P = D^-1 K~
    Eigen::MatrixXd laplacian; // L = I - P
    Eigen::VectorXd degree;    // D_i = sum_j K~_ij
};

MarkovLaplacian markov_and_laplacian(const Eigen::MatrixXd& k_tilde);

// Inner product used to orthonormalize eigenfunctions: sum_k w_k phi_ki phi_kj.
// Degree uses w = D as written; Probability uses w = D / sum(D).
enum class InnerProduct { Degree, Probability };

struct EigenBasis {
    Eigen::VectorXd eigenvalues;    // ascending, first is the trivial 0
    Eigen::MatrixXd eigenfunctions; // n x l, column j is phi_j
    Eigen::VectorXd degree;
    Eigen::VectorXd q;
    Eigen::VectorXd residuals;      // |L phi - lambda phi| per pair
    double alpha = 0.0;
    InnerProduct inner_product = InnerProduct::Degree;
    std::uint64_t source_hash = 0;

    Eigen::Index samples() const { return eigenfunctions.rows(); }
    Eigen::Index size() const { return eigenfunctions.cols(); }
    Eigen::VectorXd weights() const;
    double inner(const Eigen::VectorXd& f, const Eigen::VectorXd& g) const;
};

// The l smallest eigenpairs of L. Solved through the symmetric conjugate
// D^1/2 P D^-1/2; eigenvectors are mapped back, weight-orthonormalized and
// sign-fixed so that the first entry of largest magnitude is positive.
EigenBasis eigs(const Eigen::MatrixXd& laplacian, const Eigen::VectorXd& degree, std::size_t l,
                InnerProduct ip = InnerProduct::Degree);

// normalize -> markov_and_laplacian -> eigs, carrying Q, alpha and the kernel hash.
EigenBasis decompose(const KernelMatrix& k, double alpha, std::size_t l, InnerProduct ip = InnerProduct::Degree);

std::uint64_t content_hash(const EigenBasis& basis);

// EIGB: magic, version, n, l, kernel hash, alpha, inner product, D, lambda, Phi (row-major).
void save_eigen_basis(const EigenBasis& basis, const std::filesystem::path& path);
EigenBasis load_eigen_basis(const std::filesystem::path& path);

enum class ModeClass { Periodic, LowFrequency, Intermittent, Other };

std::string to_string(ModeClass c);

struct DiagnosticThresholds {
    double periodic_power_fraction = 0.6;  // within +-1 bin of k/12 cycles per month
    double lowfreq_power_fraction = 0.6;   // below lowfreq_cutoff
    double lowfreq_cutoff = 1.0 / 24.0;    // cycles per month
    double positive_acf_months = 12.0;
    double intermittent_bandwidth_bins = 3.0;
    double smoothing_half_width = 2.0;     // running-mean half width, bins
    double peak_prominence = 4.0;          // peak over median smoothed power
    double peak_window_bins = 24.0;        // half width of the band the peak width is measured in
    double max_lag_months = 120.0;
};

struct ModeDiagnostics {
    Eigen::VectorXd frequencies; // cycles per month, bins 1..N/2
    Eigen::VectorXd periodogram;
    Eigen::VectorXd autocorrelation; // lag 0.. in samples
    ModeClass classification = ModeClass::Other;
    double dominant_period = 0.0; // months
    double peak_bandwidth_bins = 0.0; // narrowest band with half the power near the peak
};

ModeDiagnostics mode_diagnostics(const Eigen::VectorXd& phi, std::int64_t dt,
                                 const DiagnosticThresholds& thresholds = {});

} // namespace analogcast

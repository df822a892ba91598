#pragma once

#include "analogcast/embedding.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace analogcast {

enum class KernelKind { Gaussian, Nlsa, NlsaMultivariate };

std::string to_string(KernelKind kind);
KernelKind parse_kernel_kind(const std::string& s);

struct KernelSpec {
    KernelKind kind = KernelKind::NlsaMultivariate;
    double epsilon = 2.0; // NLSA bandwidth, dimensionless
    double sigma0 = 1.0;  // Gaussian bandwidth, squared-distance units
    double alpha = 0.0;   // diffusion-maps normalization exponent
};

void validate(const KernelSpec& spec);
std::uint64_t content_hash(const KernelSpec& spec);

// exp(-|xi - xj|^2 / sigma0)
double gaussian(const Eigen::VectorXd& xi, const Eigen::VectorXd& xj, double sigma0);

// exp(-|xi - xj|^2 / (epsilon * vi * vj)); vi, vj are phase velocities.
double nlsa(const Eigen::VectorXd& xi, const Eigen::VectorXd& xj, double vi, double vj, double epsilon);

// Product of per-component NLSA factors; dimensionless in each component.
double nlsa_multivariate(std::span<const Eigen::VectorXd> xi, std::span<const Eigen::VectorXd> xj,
                         std::span<const double> vi, std::span<const double> vj, double epsilon);

// Per-component squared Euclidean distances, rows index `left`, columns `right`.
struct SquaredDistances {
    std::vector<Eigen::MatrixXd> per_component;

    Eigen::Index rows() const { return per_component.empty() ? 0 : per_component.front().rows(); }
    Eigen::Index cols() const { return per_component.empty() ? 0 : per_component.front().cols(); }
};

SquaredDistances squared_distances(const EmbeddedSeries& left, const EmbeddedSeries& right);
// Same as squared_distances(s, s) but evaluates each unordered pair once.
SquaredDistances squared_distances(const EmbeddedSeries& s);

// E such that the kernel is exp(-E), evaluated for any spec on cached distances.
Eigen::MatrixXd kernel_exponents(const SquaredDistances& dist, const EmbeddedSeries& left,
                                 const EmbeddedSeries& right, const KernelSpec& spec);

struct KernelMatrix {
    Eigen::MatrixXd values; // symmetric, unit diagonal
    Eigen::VectorXd row_sums;
    KernelSpec spec;
    std::vector<std::int64_t> timestamps;
    std::uint64_t source_hash = 0; // hash of (embedded data, spec)

    Eigen::Index size() const { return values.rows(); }
};

KernelMatrix build_matrix(const EmbeddedSeries& emb, const KernelSpec& spec);
KernelMatrix build_matrix(const EmbeddedSeries& emb, const SquaredDistances& dist, const KernelSpec& spec);

// n' x n kernel between test samples (rows) and training samples (columns).
Eigen::MatrixXd cross_matrix(const EmbeddedSeries& test, const EmbeddedSeries& train, const KernelSpec& spec);

Eigen::MatrixXd row_normalize(const Eigen::MatrixXd& k);

// Row-normalized exp(-E - offset_j) computed with a per-row shift, so rows
// whose raw kernel underflows still yield a valid distribution.
Eigen::MatrixXd normalized_weights(const Eigen::MatrixXd& exponents, const Eigen::VectorXd& column_offset);
Eigen::MatrixXd normalized_weights(const Eigen::MatrixXd& exponents);

// Level l halves the bandwidth l times: sigma0 for Gaussian, epsilon for NLSA kinds.
std::vector<KernelSpec> multiscale_family(const KernelSpec& base, std::size_t max_level);

enum class Sigma0Policy { MedianSquaredDistance, MedianDistance };
double default_sigma0(const SquaredDistances& symmetric, Sigma0Policy policy = Sigma0Policy::MedianSquaredDistance);

std::uint64_t kernel_source_hash(const EmbeddedSeries& emb, const KernelSpec& spec);

// KMAT cache: magic, n, source hash, row-major values.
void save_kernel_matrix(const KernelMatrix& k, const std::filesystem::path& path);
KernelMatrix load_kernel_matrix(const std::filesystem::path& path, const KernelSpec& spec,
                                std::vector<std::int64_t> timestamps);

} // namespace analogcast

#pragma once

#include "analogcast/dataset.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace analogcast {

struct EmbeddedComponent {
    std::string name;
    Eigen::MatrixXd lagged;        // n x (d * window); row i = (z(t_i), z(t_{i-1}), ...)
    std::size_t window = 1;        // q, in samples
    std::size_t grid_points = 0;   // d
    Eigen::VectorXd phase_velocity; // length n once attached, empty before
};

// Lag-embedded samples indexed by the timestamp of their lead snapshot.
struct EmbeddedSeries {
    std::vector<EmbeddedComponent> components;
    std::vector<std::int64_t> timestamps;
    std::int64_t dt = 1;

    std::size_t samples() const { return timestamps.size(); }
    bool has_phase_velocities() const;
};

// n = N - q + 1 lagged vectors; no phase velocities yet.
EmbeddedSeries embed(const Dataset& data, std::size_t q);

// xi_i = |x(t_i) - x(t_{i-1})| for i = 1..n-1, one vector per component.
std::vector<Eigen::VectorXd> phase_velocity(const EmbeddedSeries& emb);

// Drops the first sample (it has no predecessor) and attaches floored phase
// velocities, xi >= 1e-12 * median(xi). This is the form the kernels consume.
EmbeddedSeries with_phase_velocities(const EmbeddedSeries& emb);

// Concatenates components, keeping only lead timestamps present in all inputs.
EmbeddedSeries join(const std::vector<EmbeddedSeries>& parts);

// Samples [begin, end) of every component.
EmbeddedSeries select_samples(const EmbeddedSeries& emb, std::size_t begin, std::size_t end);

// Recovers the raw snapshots of one component from its lagged rows.
Eigen::MatrixXd unembed(const EmbeddedComponent& component);

std::uint64_t content_hash(const EmbeddedSeries& emb);

} // namespace analogcast

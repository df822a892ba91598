#pragma once

#include "analogcast/forecast.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace analogcast {

// Per-lead skill over the n'(tau) initial conditions whose truth exists.
// A missing PC means the correlation is undefined (zero variance or n' < 2).
struct SkillCurves {
    std::string method;
    std::string truth_mode;
    std::vector<std::int64_t> leads;
    std::vector<double> rmse;
    std::vector<std::optional<double>> pc;
    std::vector<std::size_t> n_used;
};

// Columns are leads; NaN in `truth` excludes the entry.
std::vector<double> rmse_curve(const Eigen::MatrixXd& prediction, const Eigen::MatrixXd& truth);
std::vector<std::optional<double>> pc_curve(const Eigen::MatrixXd& prediction, const Eigen::MatrixXd& truth);
std::vector<std::size_t> usable_counts(const Eigen::MatrixXd& truth);

inline constexpr double kDefaultSkillThreshold = 0.6;

// Index of the first lead whose PC is below the threshold; a missing PC counts
// as below. Empty means skill never drops within the lead range.
std::optional<std::size_t> horizon(const std::vector<std::optional<double>>& pc,
                                   double threshold = kDefaultSkillThreshold);
std::optional<std::size_t> horizon(const SkillCurves& skill, double threshold = kDefaultSkillThreshold);

// truth(i, c) = values[i + leads[c] / dt], NaN past the end of the record.
// Every lead must keep at least one initial condition.
Eigen::MatrixXd shifted_truth(const Eigen::VectorXd& values, const std::vector<std::int64_t>& leads, std::int64_t dt);

// Truth for eigenfunction observables: the out-of-sample extension of the
// observable on the test series, shifted by each lead.
Eigen::MatrixXd truth_ose(const GHModel& model, const EmbeddedSeries& test, const std::vector<std::int64_t>& leads);
Eigen::MatrixXd truth_ose(const LPModel& model, const EmbeddedSeries& test, const std::vector<std::int64_t>& leads);

SkillCurves evaluate(const ForecastRun& run);

void write_skill_csv(const std::vector<SkillCurves>& curves, const std::filesystem::path& path,
                     const std::string& header_comment);

} // namespace analogcast

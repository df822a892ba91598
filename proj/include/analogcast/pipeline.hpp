#pragma once

#include "analogcast/config.hpp"
#include "analogcast/embedding.hpp"
#include "analogcast/error.hpp"
#include "analogcast/laplacian.hpp"

#include <memory>
#include <string>
#include <vector>

namespace analogcast {

// Error tagged with the pipeline stage that raised it.
class StageError : public Error {
public:
    StageError(std::string stage, const std::string& message);
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

struct ExperimentData {
    std::vector<Dataset> train; // one per variable
    std::vector<Dataset> test;
};

// Generated or loaded records, split into disjoint train and test parts.
ExperimentData build_data(const ExperimentConfig& cfg);

// Per-variable embedding with phase velocities, joined on common timestamps.
EmbeddedSeries prepare_embedding(const std::vector<Dataset>& vars, const ExperimentConfig& cfg);

struct Workspace {
    ExperimentData data;
    std::shared_ptr<const EmbeddedSeries> train;
    std::shared_ptr<const EmbeddedSeries> test;
    KernelSpec spec; // with sigma0 resolved
    std::shared_ptr<const EigenBasis> basis;
};

// Runs (or reuses cached) embed -> kernel -> eigs. Caches live in cfg.out_dir.
Workspace build_workspace(const ExperimentConfig& cfg);

std::string config_header(const ExperimentConfig& cfg);

void cmd_synth(const ExperimentConfig& cfg);
void cmd_decompose(const ExperimentConfig& cfg);
void cmd_forecast(const ExperimentConfig& cfg);
void cmd_evaluate(const ExperimentConfig& cfg);
void cmd_baseline(const ExperimentConfig& cfg);

} // namespace analogcast

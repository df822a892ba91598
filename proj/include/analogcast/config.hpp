#pragma once

#include "analogcast/baselines.hpp"
#include "analogcast/dataset.hpp"
#include "analogcast/kernels.hpp"
#include "analogcast/laplacian.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace analogcast {

enum class Split { PerfectModel, ModelError };

// Generator parameters scaled for the test record of a model-error split.
struct ModelErrorConfig {
    double noise_scale = 1.0;
    double timescale_scale = 1.0;
    double amplitude_scale = 1.0;
};

struct ExperimentConfig {
    std::uint64_t seed = 1;
    Split split = Split::PerfectModel;
    double train_fraction = 0.5;
    std::filesystem::path out_dir = "out";

    // data: "modulated" or "regime" generators, or "files"
    std::string source = "modulated";
    std::vector<std::filesystem::path> train_files;
    std::vector<std::filesystem::path> test_files;
    std::string synth_format = "csv";
    FieldSpec field;
    RegimeFieldSpec regime;
    ModelErrorConfig model_error;

    std::vector<std::size_t> q{24}; // one per variable, or one for all
    KernelSpec kernel;
    std::optional<double> sigma0; // empty: median squared distance
    std::size_t l = 30;
    InnerProduct inner_product = InnerProduct::Degree;

    std::optional<std::size_t> l_trunc;
    double lp_tol_rel = 1e-6;
    std::size_t lp_max_level = 12;

    std::vector<std::int64_t> leads;
    std::vector<std::size_t> neighbors{0}; // 0: every valid analog
    std::vector<std::string> methods{"keaf-gh", "keaf-lp", "persistence"};

    std::string observable = "eigenfunction"; // or "integrated-anomaly"
    std::size_t eigen_index = 2;              // 1-based, phi_1 is constant
    std::size_t variable = 1;                 // 1-based, integrated-anomaly only
    bool detrend = false;

    std::vector<std::size_t> cluster_counts{1, 2, 3};
    std::vector<std::size_t> switch_budgets{4, 8, 16, 32};
    std::size_t restarts = 10;
    std::vector<std::string> schemes{"fixed", "pi", "realization"};
    Blend blend = Blend::Coefficients;
    std::size_t threads = 1;

    double threshold = 0.6;

    std::uint64_t hash = 0; // of the normalized key/value content

    std::size_t q_for(std::size_t variable_index) const;
};

// INI-style file: [section] headers, key = value, ';' or '#' comments.
// Relative paths resolve against `base_dir`. Unknown keys are errors.
ExperimentConfig parse_config(std::istream& in, const std::filesystem::path& base_dir);
ExperimentConfig load_config(const std::filesystem::path& path);

// "0:60" (inclusive, step 1), "0:60:3" or "0, 6, 12".
std::vector<std::int64_t> parse_leads(const std::string& s);

} // namespace analogcast

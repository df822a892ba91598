#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace analogcast {

// Month indices count months since January of a user-declared year 0, so
// calendar month is (t mod 12) + 1.
int calendar_month_of(std::int64_t month_index);

// Uniformly sampled gridded series, one variable per dataset.
struct Dataset {
    Eigen::MatrixXd values; // N samples x d grid points
    std::vector<std::int64_t> timestamps;
    std::int64_t dt = 1; // months
    std::string variable_name;
    std::optional<Eigen::VectorXd> cell_areas;
    std::vector<int> calendar_month; // 1..12, one per sample
    std::string description;         // provenance; a CSV comment line, not persisted in ACST

    std::size_t samples() const { return static_cast<std::size_t>(values.rows()); }
    std::size_t grid_points() const { return static_cast<std::size_t>(values.cols()); }

    // Builds a dataset with timestamps first_month, first_month + dt, ...
    static Dataset uniform(Eigen::MatrixXd values, std::int64_t first_month, std::int64_t dt,
                           std::string name, std::optional<Eigen::VectorXd> areas = std::nullopt);
};

// Throws analogcast::Error describing the first violated invariant.
void validate(const Dataset& ds);

// Contiguous sample range [begin, end).
Dataset slice(const Dataset& ds, std::size_t begin, std::size_t end);

struct ScalarObservable {
    Eigen::VectorXd values;
    std::vector<std::int64_t> timestamps;

    std::size_t size() const { return static_cast<std::size_t>(values.size()); }
};

struct Climatology {
    std::array<double, 12> monthly_mean{};
    // (intercept, slope per year) for each calendar month, when fitted.
    std::optional<std::array<std::pair<double, double>, 12>> per_month_trend;
};

enum class FileFormat { Csv, RawBinary };

// ".csv" selects CSV, anything else the ACST raw-binary format.
FileFormat format_for(const std::filesystem::path& path);

Dataset load_dataset(const std::filesystem::path& path, FileFormat format);
Dataset load_dataset(const std::filesystem::path& path);
void save_dataset(const Dataset& ds, const std::filesystem::path& path, FileFormat format);
void save_dataset(const Dataset& ds, const std::filesystem::path& path);

Climatology monthly_climatology(const ScalarObservable& obs);

// Area-weighted sum over grid points, sum_j c(v_j, t) a(v_j).
ScalarObservable integrated_total(const Dataset& data);

// Integrated total minus the climatology of the matching calendar month.
// The climatology may come from a different (training) record.
ScalarObservable integrated_anomaly(const Dataset& data, const Climatology& clim);

// Per-calendar-month least-squares line against year index.
Climatology fit_monthly_trend(const ScalarObservable& obs);
ScalarObservable apply_monthly_trend(const ScalarObservable& obs, const Climatology& trend);
ScalarObservable detrend_monthly(const ScalarObservable& obs);

// Column-wise trends for field detrending; fitted on training, applied to test.
std::vector<Climatology> fit_field_trends(const Dataset& data);
Dataset apply_field_trends(const Dataset& data, const std::vector<Climatology>& trends);

// Sets `target` to `fill_value` wherever `mask_source` exceeds `threshold`
// (e.g. SST of ice-covered points). Both datasets must share shape and time axis.
Dataset fill_where(const Dataset& target, const Dataset& mask_source, double threshold,
                   double fill_value = -1.8);

// ---------------------------------------------------------------------------
// Synthetic generators
// ---------------------------------------------------------------------------

struct RegimeParams {
    double mu = 0.0;
    double a = 0.0;
    double sigma = 0.0;
};

struct RegimeARSpec {
    std::vector<RegimeParams> states;
    Eigen::MatrixXd transition; // K x K row-stochastic
    std::size_t n = 0;
    double x0 = 0.0;
    int initial_state = 0; // zero-based
    std::int64_t first_month = 0;
};

struct RegimeSeries {
    ScalarObservable series;
    // states[t] selects the coefficients of the step t -> t+1; zero-based.
    std::vector<int> states;
};

// x(t+1) = mu_k + a_k x(t) + sigma_k e(t), k = states[t], states Markov in T.
RegimeSeries synth_regime_ar(const RegimeARSpec& spec, std::uint64_t seed);

struct GridPointParams {
    std::vector<double> seasonal_amplitude; // one per period
    std::vector<double> seasonal_phase;     // radians, one per period
    double lowfreq_weight = 0.0;
    double intermittent_weight = 0.0;
    double intermittent_phase = 0.0;
};

struct FieldSpec {
    std::size_t d = 8;
    std::size_t n = 1200;
    std::vector<double> periods{12.0};  // seasonal harmonics, months
    double lowfreq_timescale = 60.0;    // e-folding time of the low-frequency factor
    double lowfreq_amplitude = 1.0;
    double intermittent_timescale = 36.0;
    double intermittent_amplitude = 0.5;
    double noise = 0.1;
    std::int64_t first_month = 0;
    // Optional explicit per-grid-point parameters; default patterns otherwise.
    std::vector<GridPointParams> grid;
};

struct SyntheticField {
    Dataset data;
    Eigen::VectorXd lowfreq_factor; // L(t), unit variance
    Eigen::VectorXd envelope;       // E(t), unit variance
};

// z_g(t) = sum_p A_gp cos(2 pi t / p + theta_gp) + b_g L(t)
//          + c_g E(t) cos(2 pi t / 12 + psi_g) + noise * eta_g(t)
// with L, E independent unit-variance AR(1) processes of the configured
// e-folding times and eta white Gaussian noise.
SyntheticField synth_modulated_field(const FieldSpec& spec, std::uint64_t seed);

struct RegimeFieldSpec {
    std::size_t d = 12;
    std::size_t n = 2400;
    double dwell_min = 30.0; // months spent in a regime, uniform in [min, max]
    double dwell_max = 42.0;
    double relaxation = 0.9; // per-month relaxation of the latent toward +-1
    double latent_noise = 0.02;
    double seasonal_amplitude = 1.0;
    double noise = 0.3;
    std::int64_t first_month = 0;
};

struct RegimeField {
    Dataset data;
    Eigen::VectorXd latent;   // s(t)
    std::vector<int> regime;  // 0 for the +1 regime, 1 for the -1 regime
};

// Alternating two-regime field with non-Markov (bounded) dwell times:
//   s(t+1) = r s(t) + (1 - r) m(t) + latent_noise * e(t),  m(t) = +-1,
//   z_g(t) = p_g s(t) + seasonal_amplitude cos(2 pi t / 12 + 2 pi g / d)
//            + noise * eta_g(t),  p_g = 1 + 0.5 cos(pi g / d).
// The regime flips after a dwell drawn uniformly from [dwell_min, dwell_max].
RegimeField synth_regime_field(const RegimeFieldSpec& spec, std::uint64_t seed);

} // namespace analogcast

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dimwall/csv.hpp"
#include "dimwall/kernel.hpp"
#include "dimwall/svg.hpp"

// Configuration-driven experiment runner. Each experiment writes
// results.csv, figure.svg and manifest.json into its output directory and
// reports a machine-checkable verdict through the exit status:
//   0  every asserted inequality held within its stated tolerance
//   1  an inequality was violated
//   2  invalid configuration (nothing is written)
//
// Experiments:
//   theorem-check  dimension-bound reports across subspace ranks on the
//                  full parity basis (equality case), plus an optional
//                  Monte Carlo row over random character subsets
//   kernel-wall    measured approximation error of iid kernel designs
//                  against the full parity family and the n >= (1-eps)N wall
//   sparse-wall    the same wall for k-sparse parities, with a deterministic
//                  design, iid designs, and a mean fitted-MSE column
//   mq-demo        membership-query parity recovery rate vs repetitions
//   separation     side-by-side: polynomial query count of the MQ learner
//                  vs the exponential kernel sample wall
namespace dimwall::experiments {

inline const std::vector<std::string> kExperiments = {
    "theorem-check", "kernel-wall", "sparse-wall", "mq-demo", "separation"};

/// Raw configuration: unset fields fall back to per-experiment defaults at
/// resolve time. The master seed has no default; runs must be reproducible.
struct ExperimentConfig {
    std::string experiment;
    std::optional<int> d;
    std::optional<int> k;
    std::optional<long long> n;
    std::optional<long long> trials;
    std::optional<std::uint64_t> seed;
    std::optional<double> eta;
    std::optional<double> ridge;
    std::optional<double> rel_tol;
    std::optional<std::string> kernel;
    std::map<std::string, double> kernel_params; // gamma / degree
    std::optional<std::string> out;
};

/// Flat key=value file; '#' lines are comments. Keys: experiment, d, k, n,
/// trials, seed, eta, ridge, rel_tol, kernel, gamma, degree, out. Unknown
/// keys are a ConfigError.
ExperimentConfig load_config_file(const std::filesystem::path& path);

/// Apply one key=value pair (shared by the file loader and CLI overrides).
void apply_key(ExperimentConfig& cfg, const std::string& key, const std::string& value);

/// Configuration with every field concrete and validated.
struct ResolvedConfig {
    std::string experiment;
    int d = 0;
    int k = 0;
    long long n = 0;
    long long trials = 0;
    std::uint64_t seed = 0;
    double eta = 0.0;
    double ridge = 0.0;
    double rel_tol = 0.0;
    std::string kernel_name;
    std::map<std::string, double> kernel_params;
    std::filesystem::path output_dir;
};

/// Fill defaults and validate; throws ConfigError (or CapacityError) on any
/// invalid field, before anything is written.
ResolvedConfig resolve(const ExperimentConfig& cfg);

/// Documented results.csv columns for an experiment.
std::vector<std::string> csv_columns(const std::string& experiment);

/// In-memory result of an experiment, before any file is written.
struct RunOutput {
    std::vector<std::string> header;
    std::vector<csv::Row> rows;
    svg::Plot figure{"", "", ""};
    std::vector<std::string> violations; // empty iff all inequalities held
};

/// Compute an experiment without touching the filesystem.
RunOutput execute(const ResolvedConfig& cfg);

/// Full run: resolve, execute, write results.csv + figure.svg +
/// manifest.json (manifest last, atomically). Returns the exit status.
/// Identical config and seed produce byte-identical results.csv and
/// figure.svg, and a manifest with identical checksums.
int run(const ExperimentConfig& cfg);

} // namespace dimwall::experiments

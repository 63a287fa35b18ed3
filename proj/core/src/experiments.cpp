#include "dimwall/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "dimwall/bound.hpp"
#include "dimwall/cube.hpp"
#include "dimwall/errors.hpp"
#include "dimwall/hilbert.hpp"
#include "dimwall/mq.hpp"
#include "dimwall/rng.hpp"
#include "dimwall/version.hpp"

namespace dimwall::experiments {

namespace {

using csv::format_double;
using csv::format_int;
using csv::format_uint;

constexpr double kWallTol = 1e-9;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

long long parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "' expects an integer, got '" + value + "'");
    }
}

std::uint64_t parse_uint(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const std::uint64_t v = std::stoull(value, &pos);
        if (pos != value.size() || value.front() == '-') throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "' expects a nonnegative integer, got '" +
                          value + "'");
    }
}

double parse_real(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size() || !std::isfinite(v)) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "' expects a finite real, got '" + value + "'");
    }
}

bool known_experiment(const std::string& name) {
    return std::find(kExperiments.begin(), kExperiments.end(), name) != kExperiments.end();
}

// ---------------------------------------------------------------------------
// defaults and validation

struct Defaults {
    int d, k;
    long long n, trials;
    double eta;
};

Defaults defaults_for(const std::string& experiment) {
    if (experiment == "theorem-check") return {4, 0, 0, 1, 0.0};
    if (experiment == "kernel-wall") return {10, 0, 256, 1, 0.0};
    if (experiment == "sparse-wall") return {12, 2, 33, 1, 0.0};
    if (experiment == "mq-demo") return {16, 0, 25, 200, 0.2};
    return {16, 0, 25, 200, 0.2}; // separation
}

} // namespace

ExperimentConfig load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    ExperimentConfig cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            std::ostringstream os;
            os << path.string() << ":" << lineno << ": expected key = value";
            throw ConfigError(os.str());
        }
        apply_key(cfg, trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    return cfg;
}

void apply_key(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "experiment") {
        if (!known_experiment(value)) throw ConfigError("unknown experiment '" + value + "'");
        cfg.experiment = value;
    } else if (key == "d") {
        cfg.d = static_cast<int>(parse_int(key, value));
    } else if (key == "k") {
        cfg.k = static_cast<int>(parse_int(key, value));
    } else if (key == "n") {
        cfg.n = parse_int(key, value);
    } else if (key == "trials") {
        cfg.trials = parse_int(key, value);
    } else if (key == "seed") {
        cfg.seed = parse_uint(key, value);
    } else if (key == "eta") {
        cfg.eta = parse_real(key, value);
    } else if (key == "ridge") {
        cfg.ridge = parse_real(key, value);
    } else if (key == "rel_tol") {
        cfg.rel_tol = parse_real(key, value);
    } else if (key == "kernel") {
        cfg.kernel = value;
    } else if (key == "gamma" || key == "degree") {
        cfg.kernel_params[key] = parse_real(key, value);
    } else if (key == "out") {
        cfg.out = value;
    } else {
        throw ConfigError("unknown config key '" + key + "'");
    }
}

ResolvedConfig resolve(const ExperimentConfig& cfg) {
    if (cfg.experiment.empty() || !known_experiment(cfg.experiment))
        throw ConfigError("config must name one of the experiments: theorem-check, "
                          "kernel-wall, sparse-wall, mq-demo, separation");
    if (!cfg.seed)
        throw ConfigError("config must set a master seed (runs have no wall-clock default)");

    const Defaults def = defaults_for(cfg.experiment);
    ResolvedConfig rc;
    rc.experiment = cfg.experiment;
    rc.d = cfg.d.value_or(def.d);
    rc.k = cfg.k.value_or(def.k);
    rc.n = cfg.n.value_or(def.n);
    rc.trials = cfg.trials.value_or(def.trials);
    rc.seed = *cfg.seed;
    rc.eta = cfg.eta.value_or(def.eta);
    rc.ridge = cfg.ridge.value_or(0.0);
    rc.rel_tol = cfg.rel_tol.value_or(hilbert::kDefaultRankTol);
    rc.kernel_name = cfg.kernel.value_or("gaussian");
    rc.kernel_params = cfg.kernel_params;
    rc.output_dir = cfg.out.value_or("out/" + cfg.experiment);

    const bool builds_space = rc.experiment == "theorem-check" ||
                              rc.experiment == "kernel-wall" || rc.experiment == "sparse-wall";
    const bool uses_kernel =
        rc.experiment == "kernel-wall" || rc.experiment == "sparse-wall";

    if (builds_space) {
        if (rc.d < 1) throw ConfigError("d must be at least 1");
        if (rc.d > cube::kMaxDim) {
            std::ostringstream os;
            os << "d = " << rc.d << " exceeds the hypercube cap of " << cube::kMaxDim
               << " (dense 2^d-point representation)";
            throw ConfigError(os.str());
        }
    } else if (rc.d < 1 || rc.d > 63) {
        throw ConfigError("d must lie in [1, 63]");
    }
    if (rc.trials < 1) throw ConfigError("trials must be at least 1");
    if (!(rc.eta >= 0.0 && rc.eta < 0.5)) throw ConfigError("eta must lie in [0, 1/2)");
    if (rc.ridge < 0.0) throw ConfigError("ridge must be nonnegative");
    if (!(rc.rel_tol > 0.0 && rc.rel_tol < 1.0)) throw ConfigError("rel_tol must lie in (0, 1)");

    if (uses_kernel) {
        if (rc.n < 1) throw ConfigError("n (number of design points) must be at least 1");
        // Validates the name and parameters; throws ConfigError before any output.
        kernel::kernel_by_name(rc.kernel_name, rc.d, rc.kernel_params);
    }
    if (rc.experiment == "sparse-wall" && (rc.k < 0 || rc.k > rc.d))
        throw ConfigError("k must lie in [0, d]");
    if (rc.experiment == "mq-demo" && rc.n < 1)
        throw ConfigError("n (maximum repetitions) must be at least 1");
    if (rc.experiment == "separation" && (rc.n < 1 || rc.n % 2 == 0))
        throw ConfigError("n (repetitions) must be a positive odd integer");

    return rc;
}

std::vector<std::string> csv_columns(const std::string& experiment) {
    if (experiment == "theorem-check")
        return {"d", "N", "mode", "trials", "r", "r_stderr", "epsilon", "epsilon_stderr",
                "coherence", "bound_value", "slack", "seed"};
    if (experiment == "kernel-wall")
        return {"d", "N", "kernel", "n", "rank", "epsilon", "coherence", "bound_value",
                "slack", "seed"};
    if (experiment == "sparse-wall")
        return {"d", "k", "N", "kernel", "design", "n", "rank", "epsilon", "coherence",
                "bound_value", "slack", "fit_mse_mean", "seed"};
    if (experiment == "mq-demo")
        return {"d", "eta", "repetitions", "queries", "trials", "recovered",
                "recovery_rate", "seed"};
    if (experiment == "separation")
        return {"d", "side", "eta", "repetitions", "queries", "trials", "recovery_rate",
                "epsilon", "sample_lower_bound", "seed"};
    throw ConfigError("unknown experiment '" + experiment + "'");
}

namespace {

// ---------------------------------------------------------------------------
// shared helpers

void check(std::vector<std::string>& violations, bool ok, const std::string& message) {
    if (!ok) violations.push_back(message);
}

std::vector<std::size_t> evenly_spaced_indices(std::size_t m, std::size_t n) {
    std::vector<std::size_t> xs(n);
    for (std::size_t i = 0; i < n; ++i) xs[i] = i * m / n;
    return xs;
}

// Random subset of `r` characters out of N = 2^d, as a Subspace.
Subspace random_character_subspace(const SpacePtr& space, std::size_t r, std::mt19937_64& gen) {
    const std::size_t n = space->size();
    std::vector<std::uint64_t> masks(n);
    std::iota(masks.begin(), masks.end(), 0);
    for (std::size_t i = 0; i < r; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(gen() % (n - i));
        std::swap(masks[i], masks[j]);
    }
    const int d = *cube::cube_dim(*space);
    std::vector<FuncVec> basis;
    basis.reserve(r);
    for (std::size_t i = 0; i < r; ++i)
        basis.push_back(cube::parity(space, cube::ParityIndex(d, masks[i])));
    return Subspace::orthonormal(space, std::move(basis));
}

// ---------------------------------------------------------------------------
// theorem-check

std::vector<std::size_t> rank_ladder(std::size_t n) {
    std::vector<std::size_t> ranks;
    if (n <= 32) {
        ranks.resize(n + 1);
        std::iota(ranks.begin(), ranks.end(), 0);
        return ranks;
    }
    ranks.push_back(0);
    for (std::size_t r = 1; r < n; r <<= 1) ranks.push_back(r);
    ranks.push_back(n);
    return ranks;
}

RunOutput run_theorem_check(const ResolvedConfig& rc) {
    RunOutput out;
    out.header = csv_columns(rc.experiment);

    const auto space = cube::hypercube_space(rc.d);
    const auto phis = cube::all_parities(space);
    const std::size_t n_family = phis.size();
    const double tol = bound::kSlackTol * static_cast<double>(n_family);

    std::vector<double> xs, ys;
    for (const std::size_t r : rank_ladder(n_family)) {
        std::vector<FuncVec> prefix(phis.begin(),
                                    phis.begin() + static_cast<std::ptrdiff_t>(r));
        const Subspace w = Subspace::orthonormal(space, std::move(prefix));
        const auto rep = bound::dimension_bound_report(phis, w);
        out.rows.push_back({format_int(rc.d), format_uint(n_family), to_string(rep.mode), "1",
                            format_double(rep.expected_dim), format_double(0.0),
                            format_double(rep.mean_residual_sq), format_double(0.0),
                            format_double(rep.coherence), format_double(rep.dim_lower_bound),
                            format_double(rep.slack), format_uint(rc.seed)});
        // The family is an orthonormal basis of the whole space, so the
        // bound must be tight at every rank.
        check(out.violations, std::fabs(rep.slack) <= tol,
              "equality-case slack " + format_double(rep.slack) + " at rank " +
                  format_double(rep.expected_dim));
        xs.push_back(static_cast<double>(r));
        ys.push_back(rep.mean_residual_sq);
    }

    if (rc.trials > 1) {
        bound::SubspaceSampler sampler{
            "uniformly random rank, uniformly random character subset",
            [&space, n_family](std::uint64_t seed) {
                std::mt19937_64 gen(seed);
                const auto r = static_cast<std::size_t>(gen() % (n_family + 1));
                return random_character_subspace(space, r, gen);
            }};
        const auto rep = bound::dimension_bound_monte_carlo(
            phis, sampler, static_cast<std::size_t>(rc.trials), rc.seed);
        out.rows.push_back({format_int(rc.d), format_uint(n_family), to_string(rep.mode),
                            format_uint(rep.trials), format_double(rep.expected_dim),
                            format_double(rep.expected_dim_stderr),
                            format_double(rep.mean_residual_sq),
                            format_double(rep.mean_residual_sq_stderr),
                            format_double(rep.coherence), format_double(rep.dim_lower_bound),
                            format_double(rep.slack), format_uint(rc.seed)});
        check(out.violations, std::fabs(rep.slack) <= tol,
              "monte-carlo equality-case slack " + format_double(rep.slack));
    }

    out.figure = svg::Plot("Tightness of the dimension bound (full parity basis, d = " +
                               std::to_string(rc.d) + ")",
                           "subspace rank", "mean squared residual");
    std::vector<double> wall_x = {0.0, static_cast<double>(n_family)};
    std::vector<double> wall_y = {1.0, 0.0};
    out.figure.add_line(wall_x, wall_y, "1 - r/N");
    out.figure.add_points(xs, ys, "measured");
    return out;
}

// ---------------------------------------------------------------------------
// kernel-wall

RunOutput run_kernel_wall(const ResolvedConfig& rc) {
    RunOutput out;
    out.header = csv_columns(rc.experiment);

    const auto space = cube::hypercube_space(rc.d);
    const auto phis = cube::all_parities(space);
    const auto n_family = static_cast<double>(phis.size());
    const auto spec = kernel::kernel_by_name(rc.kernel_name, rc.d, rc.kernel_params);
    const auto n_points = static_cast<std::size_t>(rc.n);

    std::vector<double> xs, ys;
    for (long long t = 0; t < rc.trials; ++t) {
        const std::uint64_t trial_seed = rng::derive_seed(rc.seed, static_cast<std::uint64_t>(t));
        const auto design = kernel::sample_points_iid(*space, n_points, trial_seed);
        const Subspace w = kernel::method_subspace(spec, design, space, rc.rel_tol);
        const auto rep = bound::dimension_bound_report(phis, w);

        out.rows.push_back({format_int(rc.d), format_double(n_family), spec.name,
                            format_int(rc.n), format_uint(w.rank()),
                            format_double(rep.mean_residual_sq), format_double(rep.coherence),
                            format_double(rep.dim_lower_bound), format_double(rep.slack),
                            format_uint(trial_seed)});

        const double wall = 1.0 - static_cast<double>(w.rank()) / n_family;
        check(out.violations, rep.mean_residual_sq >= wall - kWallTol,
              "measured error " + format_double(rep.mean_residual_sq) +
                  " fell below the dimension wall " + format_double(wall));
        const double needed = (1.0 - rep.mean_residual_sq) * n_family;
        check(out.violations, needed <= static_cast<double>(rc.n) + 1e-8 * n_family,
              "sample-size lower bound " + format_double(needed) + " exceeds n = " +
                  format_int(rc.n));
        xs.push_back(static_cast<double>(rc.n));
        ys.push_back(rep.mean_residual_sq);
    }

    out.figure = svg::Plot("Kernel dimension wall: " + spec.name + ", d = " +
                               std::to_string(rc.d),
                           "design size n", "mean squared error over all parities");
    out.figure.set_x_range(0.0, n_family);
    out.figure.set_y_range(0.0, 1.05);
    out.figure.add_line({0.0, n_family}, {1.0, 0.0}, "wall 1 - n/N");
    out.figure.add_points(xs, ys, "iid designs");
    return out;
}

// ---------------------------------------------------------------------------
// sparse-wall

RunOutput run_sparse_wall(const ResolvedConfig& rc) {
    RunOutput out;
    out.header = csv_columns(rc.experiment);

    const auto space = cube::hypercube_space(rc.d);
    const auto phis = cube::k_sparse_parities(space, rc.k);
    const auto n_family = static_cast<double>(phis.size());
    const auto spec = kernel::kernel_by_name(rc.kernel_name, rc.d, rc.kernel_params);
    const auto n_points = static_cast<std::size_t>(rc.n);

    struct Design {
        std::string name;
        std::vector<std::size_t> xs;
        std::uint64_t seed;
    };
    std::vector<Design> designs;
    designs.push_back({"deterministic", evenly_spaced_indices(space->size(), n_points), rc.seed});
    for (long long t = 0; t < rc.trials; ++t) {
        const std::uint64_t trial_seed = rng::derive_seed(rc.seed, static_cast<std::uint64_t>(t));
        designs.push_back({"iid", kernel::sample_points_iid(*space, n_points, trial_seed),
                           trial_seed});
    }

    std::vector<double> xs_fig, eps_fig, fit_fig;
    for (const auto& design : designs) {
        const Subspace w = kernel::method_subspace(spec, design.xs, space, rc.rel_tol);
        const auto rep = bound::dimension_bound_report(phis, w);

        // Mean fitted MSE across every target in the family: an actual
        // kernel fit can only sit above the span's wall on average.
        double fit_mse_sum = 0.0;
        for (const auto& target : phis) {
            std::vector<double> ys(design.xs.size());
            for (std::size_t i = 0; i < design.xs.size(); ++i) ys[i] = target[design.xs[i]];
            const auto f = kernel::fit(spec, kernel::LabeledSample(space, design.xs, ys),
                                       rc.ridge);
            fit_mse_sum += kernel::mse_under_P(f, target);
        }
        const double fit_mse_mean = fit_mse_sum / n_family;

        out.rows.push_back({format_int(rc.d), format_int(rc.k), format_double(n_family),
                            spec.name, design.name, format_int(rc.n), format_uint(w.rank()),
                            format_double(rep.mean_residual_sq), format_double(rep.coherence),
                            format_double(rep.dim_lower_bound), format_double(rep.slack),
                            format_double(fit_mse_mean), format_uint(design.seed)});

        const double wall = 1.0 - static_cast<double>(w.rank()) / n_family;
        check(out.violations, rep.mean_residual_sq >= wall - kWallTol,
              design.name + " design: measured error " + format_double(rep.mean_residual_sq) +
                  " fell below the dimension wall " + format_double(wall));
        check(out.violations, fit_mse_mean >= rep.mean_residual_sq - kWallTol,
              design.name + " design: mean fitted MSE " + format_double(fit_mse_mean) +
                  " beat the best-in-span error " + format_double(rep.mean_residual_sq));
        xs_fig.push_back(static_cast<double>(rc.n));
        eps_fig.push_back(rep.mean_residual_sq);
        fit_fig.push_back(fit_mse_mean);
    }

    out.figure = svg::Plot("Sparse parity wall: " + spec.name + ", d = " +
                               std::to_string(rc.d) + ", k = " + std::to_string(rc.k),
                           "design size n", "mean squared error over k-sparse parities");
    out.figure.set_x_range(0.0, n_family);
    out.figure.set_y_range(0.0, 1.05);
    out.figure.add_line({0.0, n_family}, {1.0, 0.0}, "wall 1 - n/N");
    out.figure.add_points(xs_fig, eps_fig, "best in span");
    out.figure.add_points(xs_fig, fit_fig, "mean fitted MSE");
    return out;
}

// ---------------------------------------------------------------------------
// mq-demo

RunOutput run_mq_demo(const ResolvedConfig& rc) {
    RunOutput out;
    out.header = csv_columns(rc.experiment);

    std::vector<double> xs, ys;
    for (long long reps = 1; reps <= rc.n; reps += 2) {
        const std::uint64_t row_seed = rng::derive_seed(rc.seed, static_cast<std::uint64_t>(reps));
        const auto r = static_cast<std::uint64_t>(reps);
        const auto trials = static_cast<std::uint64_t>(rc.trials);
        const std::uint64_t recovered = mq::recovery_count(rc.d, rc.eta, r, trials, row_seed);
        const double rate = static_cast<double>(recovered) / static_cast<double>(trials);
        const std::uint64_t queries = static_cast<std::uint64_t>(rc.d + 1) * r;

        out.rows.push_back({format_int(rc.d), format_double(rc.eta), format_uint(r),
                            format_uint(queries), format_uint(trials), format_uint(recovered),
                            format_double(rate), format_uint(row_seed)});

        check(out.violations, rate >= 0.0 && rate <= 1.0, "recovery rate outside [0, 1]");
        if (rc.eta == 0.0)
            check(out.violations, recovered == trials,
                  "noiseless recovery must be exact, got " + format_double(rate));
        xs.push_back(static_cast<double>(reps));
        ys.push_back(rate);
    }

    out.figure = svg::Plot("Parity recovery by non-adaptive membership queries (d = " +
                               std::to_string(rc.d) + ", eta = " + format_double(rc.eta) + ")",
                           "repetitions per query point", "recovery rate");
    out.figure.set_y_range(0.0, 1.05);
    out.figure.add_line(xs, ys, "measured");
    out.figure.add_hline(1.0, "exact recovery");
    return out;
}

// ---------------------------------------------------------------------------
// separation

RunOutput run_separation(const ResolvedConfig& rc) {
    RunOutput out;
    out.header = csv_columns(rc.experiment);

    const auto trials = static_cast<std::uint64_t>(rc.trials);
    const double family = std::ldexp(1.0, rc.d); // N = 2^d parities

    // MQ side: measured recovery, polynomially many queries.
    struct MqRow {
        const char* side;
        double eta;
        std::uint64_t reps;
    };
    const MqRow mq_rows[] = {{"mq-noiseless", 0.0, 1},
                             {"mq-noisy", rc.eta, static_cast<std::uint64_t>(rc.n)}};
    std::vector<double> mq_queries;
    for (const auto& row : mq_rows) {
        const std::uint64_t row_seed = rng::derive_seed(rc.seed, row.reps);
        const std::uint64_t recovered = mq::recovery_count(rc.d, row.eta, row.reps, trials,
                                                           row_seed);
        const double rate = static_cast<double>(recovered) / static_cast<double>(trials);
        const std::uint64_t queries = static_cast<std::uint64_t>(rc.d + 1) * row.reps;
        out.rows.push_back({format_int(rc.d), row.side, format_double(row.eta),
                            format_uint(row.reps), format_uint(queries), format_uint(trials),
                            format_double(rate), "", "", format_uint(row_seed)});
        if (row.eta == 0.0)
            check(out.violations, recovered == trials, "noiseless recovery must be exact");
        check(out.violations, rate >= 0.0 && rate <= 1.0, "recovery rate outside [0, 1]");
        mq_queries.push_back(static_cast<double>(queries));
    }

    // Kernel side: the sample wall (1 - eps) * 2^d, no measurement needed.
    const double eps_grid[] = {0.05, 0.1, 0.25, 0.5};
    std::vector<double> bound_x, bound_y;
    for (const double eps : eps_grid) {
        const double needed = kernel::sample_size_lower_bound(
            static_cast<std::size_t>(family), eps);
        out.rows.push_back({format_int(rc.d), "kernel-bound", "", "", "", "", "",
                            format_double(eps), format_double(needed), format_uint(rc.seed)});
        check(out.violations, needed == (1.0 - eps) * family,
              "kernel sample bound must equal (1 - eps) * 2^d");
        bound_x.push_back(eps);
        bound_y.push_back(needed);
    }

    out.figure = svg::Plot("Queries needed at d = " + std::to_string(rc.d) +
                               ": kernel wall vs membership-query learner",
                           "guaranteed mean squared error", "labeled examples");
    out.figure.add_line(bound_x, bound_y, "kernel wall (1-e)2^d");
    out.figure.add_hline(mq_queries[0], "MQ noiseless queries");
    out.figure.add_hline(mq_queries[1], "MQ noisy queries");
    return out;
}

// ---------------------------------------------------------------------------
// output files

std::string iso8601_utc_now() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_manifest(const ResolvedConfig& rc, const RunOutput& result,
                    const std::map<std::string, std::string>& output_bytes) {
    nlohmann::ordered_json m;
    m["experiment"] = rc.experiment;
    m["version"] = kVersion;
    m["generated_at"] = iso8601_utc_now();
    m["seed"] = rc.seed;

    nlohmann::ordered_json cfg;
    cfg["d"] = rc.d;
    cfg["k"] = rc.k;
    cfg["n"] = rc.n;
    cfg["trials"] = rc.trials;
    cfg["eta"] = rc.eta;
    cfg["ridge"] = rc.ridge;
    cfg["rel_tol"] = rc.rel_tol;
    cfg["kernel"] = rc.kernel_name;
    cfg["kernel_params"] = rc.kernel_params;
    cfg["out"] = rc.output_dir.string();
    m["config"] = cfg;

    nlohmann::ordered_json outputs;
    for (const auto& [name, bytes] : output_bytes) {
        outputs[name] = {{"bytes", bytes.size()}, {"fnv1a64", csv::fnv1a64_hex(bytes)}};
    }
    m["outputs"] = outputs;
    m["verdict"] = result.violations.empty() ? "pass" : "fail";
    m["violations"] = result.violations;

    // Written last and atomically: the manifest's existence certifies that
    // every listed output is complete.
    const auto tmp = rc.output_dir / "manifest.json.tmp";
    const auto final_path = rc.output_dir / "manifest.json";
    {
        std::ofstream of(tmp, std::ios::binary | std::ios::trunc);
        if (!of) throw Error("cannot write " + tmp.string());
        of << m.dump(2) << '\n';
    }
    std::filesystem::rename(tmp, final_path);
}

} // namespace

RunOutput execute(const ResolvedConfig& rc) {
    if (rc.experiment == "theorem-check") return run_theorem_check(rc);
    if (rc.experiment == "kernel-wall") return run_kernel_wall(rc);
    if (rc.experiment == "sparse-wall") return run_sparse_wall(rc);
    if (rc.experiment == "mq-demo") return run_mq_demo(rc);
    if (rc.experiment == "separation") return run_separation(rc);
    throw ConfigError("unknown experiment '" + rc.experiment + "'");
}

int run(const ExperimentConfig& cfg) {
    ResolvedConfig rc;
    try {
        rc = resolve(cfg);
    } catch (const Error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    }

    try {
        const RunOutput result = execute(rc);

        std::filesystem::create_directories(rc.output_dir);
        const std::string csv_bytes = csv::render(result.header, result.rows);
        csv::write_file(rc.output_dir / "results.csv", csv_bytes);
        const std::string svg_bytes = result.figure.render();
        csv::write_file(rc.output_dir / "figure.svg", svg_bytes);
        write_manifest(rc, result,
                       {{"results.csv", csv_bytes}, {"figure.svg", svg_bytes}});

        if (!result.violations.empty()) {
            for (const auto& v : result.violations)
                std::cerr << "violation: " << v << '\n';
            return 1;
        }
        return 0;
    } catch (const BoundViolationError& e) {
        std::cerr << "violation: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace dimwall::experiments

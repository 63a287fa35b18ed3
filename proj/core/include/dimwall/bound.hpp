#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dimwall/space.hpp"

// The dimension lower bound for linear approximation: given N unit-norm
// functions phi_1..phi_N and a (possibly random) finite-dimensional subspace
// W, the expected dimension of W is at least
//
//     N * (1 - mean_residual_sq) / (1 + coherence),
//
// with equality when the family is an orthonormal basis of the whole space.
// This module computes every quantity of that inequality exactly on finite
// spaces, in deterministic and Monte Carlo (random subspace) regimes.
namespace dimwall::bound {

enum class RunMode { deterministic, monte_carlo };

const char* to_string(RunMode mode) noexcept;

/// Every quantity of the dimension inequality for one instance.
struct BoundReport {
    std::size_t n_functions = 0;       // family size N
    double expected_dim = 0.0;         // mean dim(W) over trials; exact when deterministic
    double mean_residual_sq = 0.0;     // average best-approximation error over the family
    double coherence = 0.0;            // sqrt of the summed squared cross inner products
    double dim_lower_bound = 0.0;      // n_functions * (1 - mean_residual_sq) / (1 + coherence)
    double slack = 0.0;                // expected_dim - dim_lower_bound; >= -1e-9 * N always
    RunMode mode = RunMode::deterministic;
    std::size_t trials = 1;            // 1 in deterministic mode
    double expected_dim_stderr = 0.0;  // 0 in deterministic mode
    double mean_residual_sq_stderr = 0.0;
};

/// A reproducible distribution over subspaces: draw(seed) must return
/// bitwise-identical bases for identical seeds.
struct SubspaceSampler {
    std::string description;
    std::function<Subspace(std::uint64_t seed)> draw;
};

// Family members admitted as "unit norm" when |norm_sq - 1| <= 1e-6;
// internal guarantees are tested at 1e-9.
inline constexpr double kUnitNormAdmission = 1e-6;

// The inequality must hold within -1e-9 * N; worse means a bug.
inline constexpr double kSlackTol = 1e-9;

/// sqrt(sum over ordered pairs i != j of <phi_i, phi_j>^2). Zero for an
/// orthonormal family. Throws UnitNormError if any member strays from unit
/// norm by more than the admission tolerance.
double coherence(const std::vector<FuncVec>& phis);

/// Average of residual_sq(phi_i, w) over the family; lies in [0, 1] up to
/// the unit-norm admission slop.
double mean_residual_sq(const std::vector<FuncVec>& phis, const Subspace& w);

/// Full report for a deterministic subspace. Throws BoundViolationError if
/// the inequality fails outside tolerance (an implementation bug).
BoundReport dimension_bound_report(const std::vector<FuncVec>& phis, const Subspace& w);

/// Monte Carlo report over `trials` independent subspace draws. Per-trial
/// seeds are derived from `seed` by counter-based splitting, so the result
/// is reproducible and independent of evaluation order. Errors inside a
/// trial are rethrown as TrialError annotated with the trial index and seed.
/// The inequality holds for the empirical mixture of draws as well, so the
/// same slack check applies.
BoundReport dimension_bound_monte_carlo(const std::vector<FuncVec>& phis,
                                        const SubspaceSampler& sampler, std::size_t trials,
                                        std::uint64_t seed);

struct BoasBellmanResult {
    double lhs = 0.0; // sum_i <g, phi_i>^2
    double rhs = 0.0; // <g,g> * (max_i <phi_i,phi_i> + sqrt(sum_{i!=j} <phi_i,phi_j>^2))
    bool holds = false;
};

/// Bessel-type inequality for arbitrary (not necessarily unit-norm)
/// families: lhs <= rhs within 1e-9 * max(1, rhs). Some renderings square
/// the <g,g> and max terms; for unit-norm families the two readings agree,
/// and the classical first-power form is used here.
BoasBellmanResult boas_bellman_check(const FuncVec& g, const std::vector<FuncVec>& phis);

} // namespace dimwall::bound

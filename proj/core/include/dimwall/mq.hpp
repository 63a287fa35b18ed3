#pragma once

#include <cstdint>
#include <vector>

#include "dimwall/cube.hpp"

// Non-adaptive membership-query learning of parity functions, noiseless and
// under random classification noise. The query plan is a pure value built
// from (d, repetitions) alone -- no code path from an oracle reaches plan
// construction, so non-adaptivity holds by type structure. With (d+1) *
// repetitions queries this learner recovers any of the 2^d parities, a count
// polynomial in d where any fixed-span kernel method needs close to 2^d.
// The base-plus-flips plan is one concrete such learner, not the only one.
namespace dimwall::mq {

/// Query points fixed before any label is observed: the all-ones vertex and
/// the d single-coordinate flips, each to be asked `repetitions` times
/// (odd, so per-point majority votes cannot tie).
struct QueryPlan {
    int d = 0;
    std::vector<cube::HypercubePoint> points;
    std::uint64_t repetitions = 1;

    std::uint64_t total_requests() const noexcept {
        return static_cast<std::uint64_t>(points.size()) * repetitions;
    }
};

/// Build the (d+1)-point plan. Even repetition counts are rejected.
QueryPlan parity_query_plan(int d, std::uint64_t repetitions);

/// Membership oracle for a parity target under random classification noise:
/// each label request is independently flipped with probability eta. The
/// flip for a given (point, request_index, seed) triple is a pure function
/// of that triple, so label streams are reproducible.
class NoisyOracle {
public:
    NoisyOracle(cube::ParityIndex target, double eta, std::uint64_t seed);

    int label(const cube::HypercubePoint& x, std::uint64_t request_index) const;
    const cube::ParityIndex& target() const noexcept { return target_; }

private:
    cube::ParityIndex target_;
    double eta_;
    std::uint64_t seed_;
};

/// All labels for the plan in plan order: point 0's repetitions first (with
/// request indices 0..r-1), then point 1's, and so on.
std::vector<int> collect_labels(const QueryPlan& plan, const NoisyOracle& oracle);

/// Recover the parity index from labels given in plan order: take the
/// per-point majority, then set bit i iff the majority at flip_i differs
/// from the majority at the all-ones point. Exact on noiseless labels.
cube::ParityIndex learn_parity(const QueryPlan& plan, const std::vector<int>& labels);

/// Number of trials (uniformly random target, fresh oracle) in which
/// learn_parity returns the exact target. Deterministic per seed.
std::uint64_t recovery_count(int d, double eta, std::uint64_t repetitions,
                             std::uint64_t trials, std::uint64_t seed);

/// recovery_count / trials, in [0, 1].
double recovery_rate(int d, double eta, std::uint64_t repetitions, std::uint64_t trials,
                     std::uint64_t seed);

} // namespace dimwall::mq

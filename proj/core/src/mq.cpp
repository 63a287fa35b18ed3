#include "dimwall/mq.hpp"

#include <random>
#include <sstream>

#include "dimwall/errors.hpp"
#include "dimwall/rng.hpp"

namespace dimwall::mq {

QueryPlan parity_query_plan(int d, std::uint64_t repetitions) {
    if (d < 1 || d > 63) throw DomainError("parity_query_plan: d must lie in [1, 63]");
    if (repetitions == 0 || repetitions % 2 == 0)
        throw DomainError("parity_query_plan: repetitions must be odd (majority votes must not tie)");
    QueryPlan plan;
    plan.d = d;
    plan.repetitions = repetitions;
    plan.points.reserve(static_cast<std::size_t>(d) + 1);
    const auto base = cube::HypercubePoint::all_ones(d);
    plan.points.push_back(base);
    for (int i = 0; i < d; ++i) plan.points.push_back(base.with_flipped(i));
    return plan;
}

NoisyOracle::NoisyOracle(cube::ParityIndex target, double eta, std::uint64_t seed)
    : target_(target), eta_(eta), seed_(seed) {
    if (!(eta >= 0.0 && eta < 0.5))
        throw DomainError("NoisyOracle: flip probability must lie in [0, 1/2)");
}

int NoisyOracle::label(const cube::HypercubePoint& x, std::uint64_t request_index) const {
    if (x.d() != target_.d) throw DomainError("NoisyOracle: point dimension mismatch");
    const int truth = cube::parity_sign(target_.mask, x.index());
    const std::uint64_t h = rng::hash_combine(rng::hash_combine(seed_, x.index()), request_index);
    const bool flip = rng::unit_double(rng::mix64(h)) < eta_;
    return flip ? -truth : truth;
}

std::vector<int> collect_labels(const QueryPlan& plan, const NoisyOracle& oracle) {
    std::vector<int> labels;
    labels.reserve(plan.total_requests());
    std::uint64_t request = 0;
    for (const auto& point : plan.points)
        for (std::uint64_t r = 0; r < plan.repetitions; ++r) labels.push_back(oracle.label(point, request++));
    return labels;
}

cube::ParityIndex learn_parity(const QueryPlan& plan, const std::vector<int>& labels) {
    if (labels.size() != plan.total_requests()) {
        std::ostringstream os;
        os << "learn_parity: expected " << plan.total_requests() << " labels, got "
           << labels.size();
        throw DomainError(os.str());
    }
    for (int y : labels)
        if (y != 1 && y != -1) throw DomainError("learn_parity: labels must be +-1");

    std::vector<int> majority(plan.points.size());
    for (std::size_t p = 0; p < plan.points.size(); ++p) {
        long long sum = 0;
        for (std::uint64_t r = 0; r < plan.repetitions; ++r)
            sum += labels[p * plan.repetitions + r];
        majority[p] = sum > 0 ? 1 : -1; // repetitions is odd, sum != 0
    }

    std::uint64_t mask = 0;
    for (int i = 0; i < plan.d; ++i)
        if (majority[static_cast<std::size_t>(i) + 1] != majority[0]) mask |= (1ULL << i);
    return cube::ParityIndex(plan.d, mask);
}

std::uint64_t recovery_count(int d, double eta, std::uint64_t repetitions,
                             std::uint64_t trials, std::uint64_t seed) {
    if (trials < 1) throw DomainError("recovery_count: need at least one trial");
    if (!(eta >= 0.0 && eta < 0.5))
        throw DomainError("recovery_count: flip probability must lie in [0, 1/2)");
    const QueryPlan plan = parity_query_plan(d, repetitions);
    const std::uint64_t mask_bits = d == 64 ? ~0ULL : (1ULL << d) - 1;

    std::uint64_t successes = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = rng::derive_seed(seed, t);
        std::mt19937_64 gen(trial_seed);
        const cube::ParityIndex target(d, gen() & mask_bits);
        const NoisyOracle oracle(target, eta, trial_seed);
        const auto learned = learn_parity(plan, collect_labels(plan, oracle));
        if (learned == target) ++successes;
    }
    return successes;
}

double recovery_rate(int d, double eta, std::uint64_t repetitions, std::uint64_t trials,
                     std::uint64_t seed) {
    return static_cast<double>(recovery_count(d, eta, repetitions, trials, seed)) /
           static_cast<double>(trials);
}

} // namespace dimwall::mq

#include "dimwall/bound.hpp"

#include <cmath>
#include <sstream>

#include "dimwall/errors.hpp"
#include "dimwall/hilbert.hpp"
#include "dimwall/rng.hpp"

namespace dimwall::bound {

namespace {

void require_unit_norms(const std::vector<FuncVec>& phis) {
    for (std::size_t i = 0; i < phis.size(); ++i) {
        const double ns = hilbert::norm_sq(phis[i]);
        if (std::fabs(ns - 1.0) > kUnitNormAdmission) {
            std::ostringstream os;
            os << "family member " << i << " has squared norm " << ns
               << "; unit norm required within " << kUnitNormAdmission;
            throw UnitNormError(os.str());
        }
    }
}

void require_nonempty(const std::vector<FuncVec>& phis) {
    if (phis.empty()) throw DomainError("family must be nonempty");
}

// sqrt(sum over ordered pairs) without any norm admission check.
double cross_term(const std::vector<FuncVec>& phis) {
    double sum = 0.0;
    for (std::size_t i = 0; i < phis.size(); ++i) {
        for (std::size_t j = i + 1; j < phis.size(); ++j) {
            const double ip = hilbert::inner_product(phis[i], phis[j]);
            sum += 2.0 * ip * ip; // (i,j) and (j,i)
        }
    }
    return std::sqrt(sum);
}

BoundReport assemble(std::size_t n, double expected_dim, double residual, double coh,
                     RunMode mode, std::size_t trials, double dim_se, double residual_se) {
    BoundReport rep;
    rep.n_functions = n;
    rep.expected_dim = expected_dim;
    rep.mean_residual_sq = residual;
    rep.coherence = coh;
    rep.dim_lower_bound = static_cast<double>(n) * (1.0 - residual) / (1.0 + coh);
    rep.slack = rep.expected_dim - rep.dim_lower_bound;
    rep.mode = mode;
    rep.trials = trials;
    rep.expected_dim_stderr = dim_se;
    rep.mean_residual_sq_stderr = residual_se;
    if (rep.slack < -kSlackTol * static_cast<double>(n)) {
        std::ostringstream os;
        os << "dimension bound violated: expected_dim = " << rep.expected_dim
           << " against lower bound " << rep.dim_lower_bound
           << " (slack " << rep.slack << "); this indicates an implementation bug";
        throw BoundViolationError(os.str());
    }
    return rep;
}

} // namespace

const char* to_string(RunMode mode) noexcept {
    return mode == RunMode::deterministic ? "deterministic" : "monte_carlo";
}

double coherence(const std::vector<FuncVec>& phis) {
    require_nonempty(phis);
    require_unit_norms(phis);
    return cross_term(phis);
}

double mean_residual_sq(const std::vector<FuncVec>& phis, const Subspace& w) {
    require_nonempty(phis);
    require_unit_norms(phis);
    double sum = 0.0;
    for (const auto& phi : phis) sum += hilbert::residual_sq(phi, w);
    return sum / static_cast<double>(phis.size());
}

BoundReport dimension_bound_report(const std::vector<FuncVec>& phis, const Subspace& w) {
    const double coh = coherence(phis);
    const double residual = mean_residual_sq(phis, w);
    return assemble(phis.size(), static_cast<double>(w.rank()), residual, coh,
                    RunMode::deterministic, 1, 0.0, 0.0);
}

BoundReport dimension_bound_monte_carlo(const std::vector<FuncVec>& phis,
                                        const SubspaceSampler& sampler, std::size_t trials,
                                        std::uint64_t seed) {
    if (trials < 1) throw DomainError("monte carlo run needs at least one trial");
    if (!sampler.draw) throw DomainError("sampler has no draw procedure");
    const double coh = coherence(phis);

    std::vector<double> dims(trials), residuals(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = rng::derive_seed(seed, t);
        try {
            const Subspace w = sampler.draw(trial_seed);
            dims[t] = static_cast<double>(w.rank());
            residuals[t] = mean_residual_sq(phis, w);
        } catch (const Error& e) {
            std::ostringstream os;
            os << "trial " << t << " (seed " << trial_seed << "): " << e.what();
            throw TrialError(os.str());
        }
    }

    // Welford accumulation: a constant stream yields its value and a zero
    // standard error exactly, so a sampler that always returns the same
    // subspace reproduces the deterministic report bit for bit.
    struct Welford {
        double mean = 0.0, m2 = 0.0;
        std::size_t n = 0;
        void add(double x) noexcept {
            ++n;
            const double delta = x - mean;
            mean += delta / static_cast<double>(n);
            m2 += delta * (x - mean);
        }
        double stderr_of_mean() const noexcept {
            if (n < 2) return 0.0;
            return std::sqrt(m2 / static_cast<double>(n - 1)) /
                   std::sqrt(static_cast<double>(n));
        }
    };
    Welford dim_acc, res_acc;
    for (std::size_t t = 0; t < trials; ++t) {
        dim_acc.add(dims[t]);
        res_acc.add(residuals[t]);
    }
    return assemble(phis.size(), dim_acc.mean, res_acc.mean, coh, RunMode::monte_carlo, trials,
                    dim_acc.stderr_of_mean(), res_acc.stderr_of_mean());
}

BoasBellmanResult boas_bellman_check(const FuncVec& g, const std::vector<FuncVec>& phis) {
    require_nonempty(phis);
    for (const auto& phi : phis) require_same_space(g, phi);

    BoasBellmanResult out;
    for (const auto& phi : phis) {
        const double ip = hilbert::inner_product(g, phi);
        out.lhs += ip * ip;
    }
    double max_norm_sq = 0.0;
    for (const auto& phi : phis) max_norm_sq = std::max(max_norm_sq, hilbert::norm_sq(phi));
    out.rhs = hilbert::norm_sq(g) * (max_norm_sq + cross_term(phis));
    out.holds = out.lhs <= out.rhs + 1e-9 * std::max(1.0, out.rhs);
    return out;
}

} // namespace dimwall::bound

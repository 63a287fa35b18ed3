#include "dimwall/hilbert.hpp"

#include <cmath>
#include <sstream>

#include "dimwall/errors.hpp"

namespace dimwall::hilbert {

namespace {

// Neumaier-compensated accumulator.
struct Accum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double term) noexcept {
        const double t = sum + term;
        comp += (std::fabs(sum) >= std::fabs(term)) ? (sum - t) + term : (term - t) + sum;
        sum = t;
    }
    double value() const noexcept { return sum + comp; }
};

double weighted_dot(const std::vector<double>& w, const std::vector<double>& a,
                    const std::vector<double>& b) noexcept {
    Accum acc;
    const std::size_t m = w.size();
    // w * (a*b), not (w*a) * b: grouping the commutative factor first makes
    // the result bitwise symmetric in a and b.
    for (std::size_t i = 0; i < m; ++i) acc.add(w[i] * (a[i] * b[i]));
    return acc.value();
}

} // namespace

double inner_product(const FuncVec& f, const FuncVec& g) {
    require_same_space(f, g);
    return weighted_dot(f.space()->weights(), f.values(), g.values());
}

double norm_sq(const FuncVec& f) {
    // All terms are nonnegative, so the compensated sum is nonnegative too.
    return weighted_dot(f.space()->weights(), f.values(), f.values());
}

Eigen::MatrixXd gram(const std::vector<FuncVec>& fs) {
    const auto n = static_cast<Eigen::Index>(fs.size());
    for (std::size_t i = 1; i < fs.size(); ++i) require_same_space(fs[0], fs[i]);
    Eigen::MatrixXd g(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            const double v = inner_product(fs[static_cast<std::size_t>(i)],
                                           fs[static_cast<std::size_t>(j)]);
            g(i, j) = v;
            g(j, i) = v;
        }
    }
    return g;
}

Subspace orthonormalize(const std::vector<FuncVec>& fs, double rel_tol) {
    if (fs.empty()) throw DomainError("orthonormalize: input list must be nonempty");
    if (!(rel_tol > 0.0 && rel_tol < 1.0))
        throw DomainError("orthonormalize: rel_tol must lie in (0, 1)");
    const SpacePtr& space = fs.front().space();
    for (std::size_t i = 1; i < fs.size(); ++i) require_same_space(fs[0], fs[i]);

    double max_norm = 0.0;
    for (const auto& f : fs) max_norm = std::max(max_norm, std::sqrt(norm_sq(f)));
    std::vector<FuncVec> basis;
    if (max_norm == 0.0) return Subspace::orthonormal(space, std::move(basis));

    const double threshold = rel_tol * max_norm;
    const auto& weights = space->weights();
    const std::size_t m = space->size();

    for (const auto& f : fs) {
        std::vector<double> v = f.values();
        // MGS sweep plus one full reorthogonalization pass.
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& u : basis) {
                Accum acc;
                const auto& uv = u.values();
                for (std::size_t i = 0; i < m; ++i) acc.add(weights[i] * (uv[i] * v[i]));
                const double c = acc.value();
                for (std::size_t i = 0; i < m; ++i) v[i] -= c * uv[i];
            }
        }
        const double r = std::sqrt(weighted_dot(weights, v, v));
        if (r < threshold || r == 0.0) continue; // numerically dependent direction
        for (double& x : v) x /= r;
        basis.emplace_back(space, std::move(v));
    }
    return Subspace::orthonormal(space, std::move(basis));
}

double residual_sq(const FuncVec& f, const Subspace& w) {
    require_same_space(f.space(), w.space());
    Accum coeff_energy;
    for (const auto& u : w.basis()) {
        const double c = inner_product(u, f);
        coeff_energy.add(c * c);
    }
    const double res = norm_sq(f) - coeff_energy.value();
    if (res < -1e-12) {
        std::ostringstream os;
        os << "residual_sq: projection residual " << res
           << " below -1e-12; basis is not orthonormal";
        throw NumericalConsistencyError(os.str());
    }
    return std::max(res, 0.0);
}

} // namespace dimwall::hilbert

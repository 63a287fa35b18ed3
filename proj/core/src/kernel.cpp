#include "dimwall/kernel.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "dimwall/errors.hpp"
#include "dimwall/hilbert.hpp"
#include "dimwall/rng.hpp"

namespace dimwall::kernel {

namespace {

double dot(std::span<const double> x, std::span<const double> y) noexcept {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

double sq_dist(std::span<const double> x, std::span<const double> y) noexcept {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        s += d * d;
    }
    return s;
}

void require_point(const DiscreteSpace& space, std::size_t x, const char* what) {
    if (x >= space.size()) {
        std::ostringstream os;
        os << what << ": point index " << x << " outside space of size " << space.size();
        throw DomainError(os.str());
    }
    if (!space.has_geometry())
        throw DomainError("kernel operations require a space with coordinate geometry");
}

} // namespace

LabeledSample::LabeledSample(SpacePtr space_in, std::vector<std::size_t> xs_in,
                             std::vector<double> ys_in)
    : space(std::move(space_in)), xs(std::move(xs_in)), ys(std::move(ys_in)) {
    if (!space) throw DomainError("LabeledSample: null space");
    if (xs.size() != ys.size())
        throw DomainError("LabeledSample: points and labels must have equal length");
    if (xs.empty()) throw DomainError("LabeledSample: sample must be nonempty");
    for (std::size_t x : xs) require_point(*space, x, "LabeledSample");
    for (double y : ys)
        if (!std::isfinite(y)) throw DomainError("LabeledSample: non-finite label");
}

std::vector<KernelSpec> builtin_kernels(int d) {
    if (d < 1) throw DomainError("builtin_kernels: dimension must be positive");
    return {kernel_by_name("gaussian", d), kernel_by_name("polynomial", d),
            kernel_by_name("linear", d)};
}

KernelSpec kernel_by_name(const std::string& name, int d,
                          const std::map<std::string, double>& overrides) {
    if (d < 1) throw ConfigError("kernel_by_name: dimension must be positive");
    const double dd = static_cast<double>(d);
    auto reject_unknown = [&overrides, &name](std::initializer_list<const char*> allowed) {
        for (const auto& entry : overrides) {
            bool known = false;
            for (const char* a : allowed) known = known || entry.first == a;
            if (!known)
                throw ConfigError("kernel '" + name + "' takes no parameter '" + entry.first +
                                  "'");
            if (!std::isfinite(entry.second)) throw ConfigError("non-finite kernel parameter");
        }
    };

    if (name == "gaussian") {
        reject_unknown({"gamma"});
        KernelSpec k;
        k.name = name;
        const double gamma =
            overrides.count("gamma") ? overrides.at("gamma") : 1.0 / dd;
        if (!(gamma > 0.0)) throw ConfigError("gaussian kernel needs gamma > 0");
        k.params = {{"gamma", gamma}};
        k.eval = [gamma](std::span<const double> x, std::span<const double> y) {
            return std::exp(-gamma * sq_dist(x, y));
        };
        return k;
    }
    if (name == "polynomial") {
        reject_unknown({"degree"});
        KernelSpec k;
        k.name = name;
        const double degree_raw = overrides.count("degree") ? overrides.at("degree") : 3.0;
        const int degree = static_cast<int>(degree_raw);
        if (degree < 1 || static_cast<double>(degree) != degree_raw)
            throw ConfigError("polynomial kernel needs a positive integer degree");
        k.params = {{"degree", static_cast<double>(degree)}};
        k.eval = [degree](std::span<const double> x, std::span<const double> y) {
            const double base = 1.0 + dot(x, y) / static_cast<double>(x.size());
            double out = 1.0;
            for (int i = 0; i < degree; ++i) out *= base;
            return out;
        };
        return k;
    }
    if (name == "linear") {
        reject_unknown({});
        KernelSpec k;
        k.name = name;
        k.eval = [](std::span<const double> x, std::span<const double> y) {
            return 1.0 + dot(x, y) / static_cast<double>(x.size());
        };
        return k;
    }
    throw ConfigError("unknown kernel '" + name + "' (builtins: gaussian, polynomial, linear)");
}

FuncVec kernel_section(const KernelSpec& k, std::size_t x0, const SpacePtr& space) {
    if (!space) throw DomainError("kernel_section: null space");
    require_point(*space, x0, "kernel_section");
    const auto anchor = space->point(x0);
    std::vector<double> values(space->size());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = k.eval(space->point(i), anchor);
    return FuncVec(space, std::move(values));
}

Eigen::MatrixXd kernel_gram(const KernelSpec& k, const DiscreteSpace& space,
                            const std::vector<std::size_t>& xs) {
    for (std::size_t x : xs) require_point(space, x, "kernel_gram");
    const auto n = static_cast<Eigen::Index>(xs.size());
    Eigen::MatrixXd g(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            const double v = k.eval(space.point(xs[static_cast<std::size_t>(i)]),
                                    space.point(xs[static_cast<std::size_t>(j)]));
            g(i, j) = v;
            g(j, i) = v;
        }
    }
    return g;
}

Subspace method_subspace(const KernelSpec& k, const std::vector<std::size_t>& xs,
                         const SpacePtr& space, double rel_tol) {
    if (xs.empty()) throw DomainError("method_subspace: point list must be nonempty");
    std::vector<FuncVec> sections;
    sections.reserve(xs.size());
    for (std::size_t x : xs) sections.push_back(kernel_section(k, x, space));
    Subspace w = hilbert::orthonormalize(sections, rel_tol);
    if (w.rank() > xs.size())
        throw NumericalConsistencyError("method_subspace: rank exceeded the sample size");
    return w;
}

KernelFit fit(const KernelSpec& k, const LabeledSample& sample, double ridge) {
    if (ridge < 0.0 || !std::isfinite(ridge))
        throw DomainError("fit: ridge must be finite and nonnegative");
    const auto n = static_cast<Eigen::Index>(sample.xs.size());
    Eigen::MatrixXd g = kernel_gram(k, *sample.space, sample.xs);
    if (ridge > 0.0)
        g.diagonal().array() += ridge * static_cast<double>(n);
    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i) y(i) = sample.ys[static_cast<std::size_t>(i)];

    // Rank-revealing solve: exact for nonsingular systems, minimum-norm
    // least squares when the Gram matrix is singular.
    Eigen::VectorXd alphas = g.completeOrthogonalDecomposition().solve(y);
    return KernelFit{k, sample.space, sample.xs, std::move(alphas)};
}

double predict(const KernelFit& f, std::size_t x) {
    require_point(*f.space, x, "predict");
    const auto px = f.space->point(x);
    double s = 0.0;
    for (std::size_t i = 0; i < f.xs.size(); ++i)
        s += f.alphas(static_cast<Eigen::Index>(i)) * f.kernel.eval(px, f.space->point(f.xs[i]));
    return s;
}

FuncVec predict_all(const KernelFit& f) {
    std::vector<double> values(f.space->size());
    for (std::size_t x = 0; x < values.size(); ++x) values[x] = predict(f, x);
    return FuncVec(f.space, std::move(values));
}

double mse_under_P(const KernelFit& f, const FuncVec& target) {
    require_same_space(f.space, target.space());
    const auto& space = *target.space();
    double sum = 0.0, comp = 0.0;
    for (std::size_t x = 0; x < space.size(); ++x) {
        const double diff = predict(f, x) - target[x];
        const double term = space.weight(x) * diff * diff;
        const double t = sum + term;
        comp += (std::fabs(sum) >= std::fabs(term)) ? (sum - t) + term : (term - t) + sum;
        sum = t;
    }
    return sum + comp;
}

double sample_size_lower_bound(std::size_t n_functions, double epsilon) {
    if (n_functions < 1) throw DomainError("sample_size_lower_bound: family must be nonempty");
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        throw DomainError("sample_size_lower_bound: epsilon must lie in [0, 1]");
    return (1.0 - epsilon) * static_cast<double>(n_functions);
}

std::vector<std::size_t> sample_points_iid(const DiscreteSpace& space, std::size_t n,
                                           std::uint64_t seed) {
    if (n < 1) throw DomainError("sample_points_iid: need at least one point");
    // Inverse-CDF sampling over an mt19937_64 stream; both are fully
    // specified, so draws are bitwise reproducible across platforms.
    std::vector<double> cdf(space.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < space.size(); ++i) {
        acc += space.weight(i);
        cdf[i] = acc;
    }
    cdf.back() = 1.0;

    std::mt19937_64 gen(seed);
    std::vector<std::size_t> xs(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = rng::unit_double(gen());
        xs[i] = static_cast<std::size_t>(
            std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    }
    return xs;
}

bound::SubspaceSampler iid_design_sampler(const KernelSpec& k, const SpacePtr& space,
                                          std::size_t n, double rel_tol) {
    if (!space) throw DomainError("iid_design_sampler: null space");
    if (n < 1) throw DomainError("iid_design_sampler: need at least one point");
    std::ostringstream os;
    os << "span of " << n << " " << k.name << "-kernel sections at points drawn iid from P";
    return bound::SubspaceSampler{
        os.str(), [k, space, n, rel_tol](std::uint64_t seed) {
            return method_subspace(k, sample_points_iid(*space, n, seed), space, rel_tol);
        }};
}

std::vector<double> noisy_labels(std::vector<double> ys, double eta, std::uint64_t seed) {
    if (!(eta >= 0.0 && eta < 0.5))
        throw DomainError("noisy_labels: flip probability must lie in [0, 1/2)");
    for (std::size_t i = 0; i < ys.size(); ++i) {
        const double u = rng::unit_double(rng::hash_combine(seed, i));
        if (u < eta) ys[i] = -ys[i];
    }
    return ys;
}

} // namespace dimwall::kernel

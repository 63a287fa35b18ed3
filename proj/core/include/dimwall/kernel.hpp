#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "dimwall/bound.hpp"
#include "dimwall/space.hpp"

// Kernel methods on finite geometric spaces: positive definite kernels, the
// span of kernel sections at sample points, ridge / least-squares fitting
// from labels, exact mean-squared error under the space's measure, and the
// sample-size lower bound n >= (1 - error) * N that the dimension bound
// forces on any such method.
namespace dimwall::kernel {

/// A symmetric positive definite kernel on coordinate vectors. Symmetry and
/// positive semidefiniteness are spot-checked by tests on sampled point
/// sets, not proven.
struct KernelSpec {
    std::string name;
    std::map<std::string, double> params;
    std::function<double(std::span<const double>, std::span<const double>)> eval;
};

/// Training examples: indices into a space plus real labels.
struct LabeledSample {
    SpacePtr space;
    std::vector<std::size_t> xs;
    std::vector<double> ys;

    LabeledSample(SpacePtr space, std::vector<std::size_t> xs, std::vector<double> ys);
};

/// A fitted predictor x -> sum_i alpha_i K(x, x_i).
struct KernelFit {
    KernelSpec kernel;
    SpacePtr space;                // home of the anchor points
    std::vector<std::size_t> xs;   // anchor point indices
    Eigen::VectorXd alphas;        // one coefficient per anchor
};

/// Stock kernels for a d-dimensional coordinate space, with documented
/// defaults: gaussian exp(-gamma*|x-y|^2) with gamma = 1/d, polynomial
/// (1 + <x,y>/d)^degree with degree = 3, and linear 1 + <x,y>/d.
std::vector<KernelSpec> builtin_kernels(int d);

/// Look up a builtin by name ("gaussian", "polynomial", "linear") and apply
/// parameter overrides ("gamma", "degree"). Throws ConfigError for unknown
/// names or parameters.
KernelSpec kernel_by_name(const std::string& name, int d,
                          const std::map<std::string, double>& overrides = {});

/// The section x -> K(x, x0) as a function on the space.
FuncVec kernel_section(const KernelSpec& k, std::size_t x0, const SpacePtr& space);

/// Kernel Gram matrix on the listed points.
Eigen::MatrixXd kernel_gram(const KernelSpec& k, const DiscreteSpace& space,
                            const std::vector<std::size_t>& xs);

/// Span of the kernel sections at the sample points, orthonormalized.
/// The rank never exceeds the number of points.
Subspace method_subspace(const KernelSpec& k, const std::vector<std::size_t>& xs,
                         const SpacePtr& space, double rel_tol = 1e-10);

/// Solve (G + ridge*n*I) alpha = y on the sample's Gram matrix G. With
/// ridge = 0 and singular G this returns the minimum-norm least-squares
/// solution. The ridge*n scaling keeps the regularizer scale-free in n.
/// This is one concrete coefficient rule among the many a kernel method may
/// use; the sample-size wall constrains all of them, whatever the rule.
KernelFit fit(const KernelSpec& k, const LabeledSample& sample, double ridge = 0.0);

double predict(const KernelFit& f, std::size_t x);

/// The fitted predictor evaluated at every point of its space.
FuncVec predict_all(const KernelFit& f);

/// Exact sum_x P(x) (predict(x) - target(x))^2. Never smaller than the
/// best-in-span residual of the target (up to 1e-9).
double mse_under_P(const KernelFit& f, const FuncVec& target);

/// (1 - epsilon) * n_functions: the number of samples any kernel method
/// needs to guarantee mean squared error epsilon across a family of
/// n_functions orthonormal targets.
double sample_size_lower_bound(std::size_t n_functions, double epsilon);

/// Sampler whose draw(seed) picks n points iid from the space's measure
/// (with replacement, by inverse CDF over a fully specified generator) and
/// returns the method subspace on them. Bitwise reproducible per seed.
bound::SubspaceSampler iid_design_sampler(const KernelSpec& k, const SpacePtr& space,
                                          std::size_t n, double rel_tol = 1e-10);

/// n points sampled iid from the space's measure, reproducible per seed.
std::vector<std::size_t> sample_points_iid(const DiscreteSpace& space, std::size_t n,
                                           std::uint64_t seed);

/// Independently flip each +-1 label with probability eta (fresh
/// randomness per position, derived from the seed).
std::vector<double> noisy_labels(std::vector<double> ys, double eta, std::uint64_t seed);

} // namespace dimwall::kernel

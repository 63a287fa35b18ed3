#pragma once

// Shared generators and independent oracles for the test suites. Oracles
// deliberately avoid the code paths they check: plain long-double summation
// instead of compensated sums, Eigen rank-revealing factorizations instead
// of Gram-Schmidt, elimination solvers instead of decomposition solves.

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <vector>

#include "dimwall/hilbert.hpp"
#include "dimwall/rng.hpp"
#include "dimwall/space.hpp"

namespace testkit {

using dimwall::FuncVec;
using dimwall::SpacePtr;
using dimwall::Subspace;

inline double unit(std::mt19937_64& gen) { return dimwall::rng::unit_double(gen()); }

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
    return lo + (hi - lo) * unit(gen);
}

// Random space with strictly positive weights summing to 1 within 1e-12.
inline SpacePtr random_space(std::mt19937_64& gen, std::size_t m) {
    std::vector<double> w(m);
    double total = 0.0;
    for (auto& x : w) {
        x = 0.05 + unit(gen);
        total += x;
    }
    for (auto& x : w) x /= total;
    // Pin the sum exactly: assign the last weight as the remainder.
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < m; ++i) acc += w[i];
    w[m - 1] = 1.0 - acc;
    return dimwall::make_space(std::move(w));
}

inline SpacePtr uniform_space(std::size_t m) {
    std::vector<double> w(m, 1.0 / static_cast<double>(m));
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < m; ++i) acc += w[i];
    w[m - 1] = 1.0 - acc;
    return dimwall::make_space(std::move(w));
}

inline FuncVec random_func(const SpacePtr& space, std::mt19937_64& gen, double lo = -1.0,
                           double hi = 1.0) {
    std::vector<double> v(space->size());
    for (auto& x : v) x = uniform(gen, lo, hi);
    return FuncVec(space, std::move(v));
}

inline FuncVec random_unit_func(const SpacePtr& space, std::mt19937_64& gen) {
    for (;;) {
        FuncVec f = random_func(space, gen);
        const double ns = dimwall::hilbert::norm_sq(f);
        if (ns < 1e-8) continue;
        std::vector<double> v = f.values();
        const double scale = 1.0 / std::sqrt(ns);
        for (auto& x : v) x *= scale;
        return FuncVec(space, std::move(v));
    }
}

inline std::vector<FuncVec> random_funcs(const SpacePtr& space, std::mt19937_64& gen,
                                         std::size_t count) {
    std::vector<FuncVec> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_func(space, gen));
    return out;
}

inline std::vector<FuncVec> random_unit_funcs(const SpacePtr& space, std::mt19937_64& gen,
                                              std::size_t count) {
    std::vector<FuncVec> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_unit_func(space, gen));
    return out;
}

inline Subspace random_subspace(const SpacePtr& space, std::mt19937_64& gen, std::size_t rank) {
    if (rank == 0) {
        std::vector<FuncVec> zero = {FuncVec(space, std::vector<double>(space->size(), 0.0))};
        return dimwall::hilbert::orthonormalize(zero);
    }
    return dimwall::hilbert::orthonormalize(random_funcs(space, gen, rank));
}

// --- oracles ---------------------------------------------------------------

// Direct weighted sum in extended precision; independent of the compensated
// accumulation used by the library.
inline double oracle_weighted_sum(const FuncVec& f, const FuncVec& g) {
    long double s = 0.0L;
    const auto& w = f.space()->weights();
    for (std::size_t i = 0; i < w.size(); ++i)
        s += static_cast<long double>(w[i]) * f[i] * g[i];
    return static_cast<double>(s);
}

// Embed functions as Euclidean columns sqrt(w) .* f, so Euclidean geometry
// of the matrix equals the weighted geometry of the functions.
inline Eigen::MatrixXd embed(const std::vector<FuncVec>& fs) {
    const auto& w = fs.front().space()->weights();
    Eigen::MatrixXd a(static_cast<Eigen::Index>(w.size()),
                      static_cast<Eigen::Index>(fs.size()));
    for (std::size_t j = 0; j < fs.size(); ++j)
        for (std::size_t i = 0; i < w.size(); ++i)
            a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                std::sqrt(w[i]) * fs[j][i];
    return a;
}

// Orthogonal projector onto the span, from a rank-revealing Householder QR.
inline Eigen::MatrixXd oracle_projector(const std::vector<FuncVec>& fs, double rel_tol) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(embed(fs));
    qr.setThreshold(rel_tol);
    const Eigen::Index r = qr.rank();
    if (r == 0)
        return Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(fs.front().size()),
                                     static_cast<Eigen::Index>(fs.front().size()));
    Eigen::MatrixXd q = qr.householderQ() *
                        Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(fs.front().size()), r);
    return q * q.transpose();
}

inline Eigen::MatrixXd projector_of(const Subspace& w) {
    if (w.rank() == 0)
        return Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(w.space()->size()),
                                     static_cast<Eigen::Index>(w.space()->size()));
    const Eigen::MatrixXd b = embed(w.basis());
    return b * b.transpose();
}

// Best-approximation residual by dense least squares (SVD), independent of
// the projection identity route.
inline double oracle_residual_sq(const FuncVec& f, const std::vector<FuncVec>& span) {
    const auto& w = f.space()->weights();
    Eigen::VectorXd b(static_cast<Eigen::Index>(w.size()));
    for (std::size_t i = 0; i < w.size(); ++i)
        b(static_cast<Eigen::Index>(i)) = std::sqrt(w[i]) * f[i];
    if (span.empty()) return b.squaredNorm();
    const Eigen::MatrixXd a = embed(span);
    const Eigen::VectorXd c = a.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(b);
    return (a * c - b).squaredNorm();
}

// Dense linear solver by Gauss-Jordan elimination with partial pivoting.
inline Eigen::VectorXd oracle_solve(Eigen::MatrixXd a, Eigen::VectorXd b) {
    const Eigen::Index n = a.rows();
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = col;
        for (Eigen::Index r = col + 1; r < n; ++r)
            if (std::fabs(a(r, col)) > std::fabs(a(pivot, col))) pivot = r;
        a.row(col).swap(a.row(pivot));
        std::swap(b(col), b(pivot));
        const double p = a(col, col);
        a.row(col) /= p;
        b(col) /= p;
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r == col) continue;
            const double factor = a(r, col);
            a.row(r) -= factor * a.row(col);
            b(r) -= factor * b(col);
        }
    }
    return b;
}

} // namespace testkit

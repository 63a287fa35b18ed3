#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "dimwall/space.hpp"

// The Boolean hypercube instantiation: uniform measure on {-1,+1}^d, parity
// characters, sparse-parity enumeration, and a fast Walsh-Hadamard transform.
//
// Enumeration convention, fixed once for all outputs and fixtures: point
// index b has coordinate i equal to +1 iff bit i of b is 0 (bit 0 is
// coordinate 1). Parity index masks use the same bit order.
namespace dimwall::cube {

inline constexpr int kMaxDim = 20; // dense 2^d vectors; desk-scale cap

/// A subset S of {1,..,d} as a d-bit mask, indexing the character chi_S.
struct ParityIndex {
    int d = 0;
    std::uint64_t mask = 0;

    ParityIndex(int d, std::uint64_t mask);
    int sparsity() const noexcept; // |S|
    bool operator==(const ParityIndex&) const = default;
};

/// One vertex of {-1,+1}^d.
class HypercubePoint {
public:
    HypercubePoint(int d, std::vector<int> coords); // coords each exactly +-1
    static HypercubePoint all_ones(int d);
    static HypercubePoint from_index(int d, std::uint64_t index);

    int d() const noexcept { return d_; }
    int coord(int i) const { return coords_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& coords() const noexcept { return coords_; }

    // Point with coordinate i (0-based) replaced by -1 times its value.
    HypercubePoint with_flipped(int i) const;

    // Canonical index: bit i set iff coordinate i is -1.
    std::uint64_t index() const noexcept;

    bool operator==(const HypercubePoint&) const = default;

private:
    int d_;
    std::vector<int> coords_;
};

/// chi_S evaluated at the vertex with the given canonical index.
inline int parity_sign(std::uint64_t mask, std::uint64_t point_index) noexcept {
    return (std::popcount(mask & point_index) & 1) ? -1 : 1;
}

/// Uniform measure on {-1,+1}^d with the canonical point order and a +-1
/// coordinate embedding. Throws CapacityError above kMaxDim, naming the
/// memory cost of the request.
SpacePtr hypercube_space(int d);

/// Dimension d if the space is structurally a canonical hypercube
/// (2^d points with ids 0..2^d-1 and uniform weights), otherwise nullopt.
std::optional<int> cube_dim(const DiscreteSpace& space);

/// The character chi_S as a function on the given hypercube space.
FuncVec parity(const SpacePtr& space, const ParityIndex& s);

// Dense character families allocate count * 2^d doubles; refuse anything
// over this many bytes, naming the cost.
inline constexpr std::uint64_t kFamilyBytesCap = 4ULL << 30;

/// All 2^d characters in mask-ascending order. Orthonormal basis of the space.
std::vector<FuncVec> all_parities(const SpacePtr& space);

/// The C(d,k) characters with exactly k variables, mask-ascending.
std::vector<FuncVec> k_sparse_parities(const SpacePtr& space, int k);

std::uint64_t binomial(int n, int k);

/// Walsh-Hadamard coefficient vector of f, indexed by parity mask: entry S
/// equals inner_product(parity(S), f). O(N log N). Requires a hypercube
/// space. The 1/N scaling matches the weighted inner product; it is not
/// self-inverse (see fwht_self_inverse).
std::vector<double> fourier_coefficients(const FuncVec& f);

/// Inverse of fourier_coefficients: rebuild the function from its
/// coefficient vector.
FuncVec synthesize(const SpacePtr& space, const std::vector<double>& coefficients);

/// The orthogonal (1/sqrt(N)) normalization of the transform, which is its
/// own inverse. Input length must be a power of two.
std::vector<double> fwht_self_inverse(std::vector<double> values);

/// In-place unnormalized butterfly transform; length must be a power of two.
void fwht_unnormalized(std::vector<double>& values);

} // namespace dimwall::cube

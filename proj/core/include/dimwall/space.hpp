#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace dimwall {

class DiscreteSpace;
using SpacePtr = std::shared_ptr<const DiscreteSpace>;

/// A finite probability space: an ordered list of points with strictly
/// positive weights summing to one. Optionally carries a coordinate
/// embedding (one fixed-length real vector per point) for kernels that
/// need geometry. Immutable after construction.
class DiscreteSpace {
public:
    // Abstract space: identifiers plus weights, no geometry.
    DiscreteSpace(std::vector<std::uint64_t> ids, std::vector<double> weights);

    // Geometric space: coords is row-major, size() * dim entries.
    DiscreteSpace(std::vector<std::uint64_t> ids, std::vector<double> weights,
                  std::vector<double> coords, std::size_t dim);

    std::size_t size() const noexcept { return weights_.size(); }
    double weight(std::size_t i) const { return weights_[i]; }
    const std::vector<double>& weights() const noexcept { return weights_; }
    std::uint64_t id(std::size_t i) const { return ids_[i]; }
    const std::vector<std::uint64_t>& ids() const noexcept { return ids_; }

    bool has_geometry() const noexcept { return dim_ > 0; }
    std::size_t dim() const noexcept { return dim_; }
    std::span<const double> point(std::size_t i) const;

    // Structural equality; used when two operands do not share the pointer.
    bool same_as(const DiscreteSpace& other) const noexcept;

private:
    void validate() const;

    std::vector<std::uint64_t> ids_;
    std::vector<double> weights_;
    std::vector<double> coords_; // empty unless geometric
    std::size_t dim_ = 0;
};

// Convenience: points 0..m-1 with the given weights, no geometry.
SpacePtr make_space(std::vector<double> weights);

/// A function on a DiscreteSpace, stored as its value vector.
class FuncVec {
public:
    FuncVec(SpacePtr space, std::vector<double> values);

    const SpacePtr& space() const noexcept { return space_; }
    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const noexcept { return values_; }

private:
    SpacePtr space_;
    std::vector<double> values_;
};

// Throws SpaceMismatchError unless f and g live on the same space
// (pointer-identical or structurally equal).
void require_same_space(const FuncVec& f, const FuncVec& g);
void require_same_space(const SpacePtr& a, const SpacePtr& b);

/// An orthonormalized basis with recorded rank. Construction validates the
/// orthonormality invariant (pairwise inner products within 1e-9 of
/// delta_ij), so holding a Subspace certifies the invariant.
class Subspace {
public:
    // Validates orthonormality of `basis` on construction.
    static Subspace orthonormal(SpacePtr space, std::vector<FuncVec> basis);

    const SpacePtr& space() const noexcept { return space_; }
    std::size_t rank() const noexcept { return basis_.size(); }
    const std::vector<FuncVec>& basis() const noexcept { return basis_; }

    static constexpr double kOrthoTol = 1e-9;

private:
    Subspace(SpacePtr space, std::vector<FuncVec> basis)
        : space_(std::move(space)), basis_(std::move(basis)) {}

    SpacePtr space_;
    std::vector<FuncVec> basis_;
};

} // namespace dimwall

#include "dimwall/space.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_set>

#include "dimwall/errors.hpp"
#include "dimwall/hilbert.hpp"

namespace dimwall {

namespace {

constexpr double kWeightSumTol = 1e-12;

} // namespace

DiscreteSpace::DiscreteSpace(std::vector<std::uint64_t> ids, std::vector<double> weights)
    : ids_(std::move(ids)), weights_(std::move(weights)) {
    validate();
}

DiscreteSpace::DiscreteSpace(std::vector<std::uint64_t> ids, std::vector<double> weights,
                             std::vector<double> coords, std::size_t dim)
    : ids_(std::move(ids)), weights_(std::move(weights)), coords_(std::move(coords)), dim_(dim) {
    if (dim_ == 0 || coords_.size() != weights_.size() * dim_)
        throw DomainError("DiscreteSpace: coordinate block must hold size()*dim entries");
    for (double c : coords_)
        if (!std::isfinite(c)) throw DomainError("DiscreteSpace: non-finite coordinate");
    validate();
}

void DiscreteSpace::validate() const {
    if (weights_.empty()) throw DomainError("DiscreteSpace: must contain at least one point");
    if (ids_.size() != weights_.size())
        throw DomainError("DiscreteSpace: ids and weights must have equal length");

    double sum = 0.0, comp = 0.0;
    for (double w : weights_) {
        if (!(w > 0.0) || !std::isfinite(w))
            throw DomainError("DiscreteSpace: weights must be strictly positive and finite");
        const double t = sum + w;
        comp += (std::fabs(sum) >= std::fabs(w)) ? (sum - t) + w : (w - t) + sum;
        sum = t;
    }
    if (std::fabs((sum + comp) - 1.0) > kWeightSumTol) {
        std::ostringstream os;
        os << "DiscreteSpace: weights sum to " << (sum + comp) << ", expected 1 within "
           << kWeightSumTol;
        throw DomainError(os.str());
    }

    std::unordered_set<std::uint64_t> seen(ids_.begin(), ids_.end());
    if (seen.size() != ids_.size())
        throw DomainError("DiscreteSpace: point identifiers must be unique");
}

std::span<const double> DiscreteSpace::point(std::size_t i) const {
    if (!has_geometry()) throw DomainError("DiscreteSpace: space has no coordinate geometry");
    return {coords_.data() + i * dim_, dim_};
}

bool DiscreteSpace::same_as(const DiscreteSpace& other) const noexcept {
    if (this == &other) return true;
    return ids_ == other.ids_ && weights_ == other.weights_ && dim_ == other.dim_ &&
           coords_ == other.coords_;
}

SpacePtr make_space(std::vector<double> weights) {
    std::vector<std::uint64_t> ids(weights.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
    return std::make_shared<DiscreteSpace>(std::move(ids), std::move(weights));
}

FuncVec::FuncVec(SpacePtr space, std::vector<double> values)
    : space_(std::move(space)), values_(std::move(values)) {
    if (!space_) throw DomainError("FuncVec: null space");
    if (values_.size() != space_->size())
        throw DomainError("FuncVec: value vector length must equal the space size");
    for (double v : values_)
        if (!std::isfinite(v)) throw DomainError("FuncVec: non-finite value");
}

void require_same_space(const SpacePtr& a, const SpacePtr& b) {
    if (a == b) return;
    if (a && b && a->same_as(*b)) return;
    throw SpaceMismatchError("operands live on different discrete spaces");
}

void require_same_space(const FuncVec& f, const FuncVec& g) {
    require_same_space(f.space(), g.space());
}

Subspace Subspace::orthonormal(SpacePtr space, std::vector<FuncVec> basis) {
    if (!space) throw DomainError("Subspace: null space");
    for (const auto& u : basis) require_same_space(u.space(), space);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            const double ip = hilbert::inner_product(basis[i], basis[j]);
            const double expect = (i == j) ? 1.0 : 0.0;
            if (std::fabs(ip - expect) > kOrthoTol) {
                std::ostringstream os;
                os << "Subspace: basis not orthonormal, <u" << i << ",u" << j << "> = " << ip;
                throw DomainError(os.str());
            }
        }
    }
    return Subspace(std::move(space), std::move(basis));
}

} // namespace dimwall

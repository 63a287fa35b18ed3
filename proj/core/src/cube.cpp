#include "dimwall/cube.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "dimwall/errors.hpp"
#include "dimwall/hilbert.hpp"

namespace dimwall::cube {

ParityIndex::ParityIndex(int d, std::uint64_t mask) : d(d), mask(mask) {
    if (d < 1 || d > 63) throw DomainError("ParityIndex: d must lie in [1, 63]");
    if (d < 64 && (mask >> d) != 0)
        throw DomainError("ParityIndex: mask uses bits beyond the ambient dimension");
}

int ParityIndex::sparsity() const noexcept { return std::popcount(mask); }

HypercubePoint::HypercubePoint(int d, std::vector<int> coords)
    : d_(d), coords_(std::move(coords)) {
    if (d_ < 1) throw DomainError("HypercubePoint: d must be positive");
    if (coords_.size() != static_cast<std::size_t>(d_))
        throw DomainError("HypercubePoint: expected exactly d coordinates");
    for (int c : coords_)
        if (c != 1 && c != -1) throw DomainError("HypercubePoint: coordinates must be +-1");
}

HypercubePoint HypercubePoint::all_ones(int d) {
    return HypercubePoint(d, std::vector<int>(static_cast<std::size_t>(d), 1));
}

HypercubePoint HypercubePoint::from_index(int d, std::uint64_t index) {
    if (d < 1 || d > 63) throw DomainError("HypercubePoint: d must lie in [1, 63]");
    if ((index >> d) != 0) throw DomainError("HypercubePoint: index out of range");
    std::vector<int> coords(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) coords[static_cast<std::size_t>(i)] = (index >> i) & 1 ? -1 : 1;
    return HypercubePoint(d, std::move(coords));
}

HypercubePoint HypercubePoint::with_flipped(int i) const {
    if (i < 0 || i >= d_) throw DomainError("HypercubePoint: flip index out of range");
    std::vector<int> coords = coords_;
    coords[static_cast<std::size_t>(i)] = -coords[static_cast<std::size_t>(i)];
    return HypercubePoint(d_, std::move(coords));
}

std::uint64_t HypercubePoint::index() const noexcept {
    std::uint64_t idx = 0;
    for (int i = 0; i < d_; ++i)
        if (coords_[static_cast<std::size_t>(i)] == -1) idx |= (1ULL << i);
    return idx;
}

SpacePtr hypercube_space(int d) {
    if (d < 1) throw DomainError("hypercube_space: d must be positive");
    if (d > kMaxDim) {
        const double gib = std::ldexp(1.0, d) * (16.0 + 8.0 * d) / (1024.0 * 1024.0 * 1024.0);
        std::ostringstream os;
        os << "hypercube_space: d = " << d << " exceeds the cap of " << kMaxDim
           << "; the dense representation would need 2^" << d << " * (16 + 8d) bytes ~ " << gib
           << " GiB";
        throw CapacityError(os.str());
    }
    const std::size_t n = std::size_t{1} << d;
    const double w = std::ldexp(1.0, -d); // exact
    std::vector<std::uint64_t> ids(n);
    std::vector<double> weights(n, w);
    std::vector<double> coords(n * static_cast<std::size_t>(d));
    for (std::size_t b = 0; b < n; ++b) {
        ids[b] = b;
        for (int i = 0; i < d; ++i)
            coords[b * static_cast<std::size_t>(d) + static_cast<std::size_t>(i)] =
                (b >> i) & 1 ? -1.0 : 1.0;
    }
    return std::make_shared<DiscreteSpace>(std::move(ids), std::move(weights), std::move(coords),
                                           static_cast<std::size_t>(d));
}

std::optional<int> cube_dim(const DiscreteSpace& space) {
    const std::size_t n = space.size();
    if (!std::has_single_bit(n)) return std::nullopt;
    const int d = std::countr_zero(n);
    if (d < 1 || d > kMaxDim) return std::nullopt;
    const double w = std::ldexp(1.0, -d);
    for (std::size_t b = 0; b < n; ++b)
        if (space.id(b) != b || space.weight(b) != w) return std::nullopt;
    return d;
}

namespace {

int require_cube(const SpacePtr& space) {
    if (!space) throw DomainError("null space");
    const auto d = cube_dim(*space);
    if (!d) throw DomainError("operation requires a canonical hypercube space");
    return *d;
}

void check_family_capacity(std::uint64_t count, std::uint64_t points, const char* what) {
    const std::uint64_t bytes = count * points * 8;
    if (bytes > kFamilyBytesCap) {
        std::ostringstream os;
        os << what << ": " << count << " dense functions on " << points << " points need "
           << bytes << " bytes, above the " << kFamilyBytesCap << "-byte cap";
        throw CapacityError(os.str());
    }
}

} // namespace

FuncVec parity(const SpacePtr& space, const ParityIndex& s) {
    const int d = require_cube(space);
    if (s.d != d) {
        std::ostringstream os;
        os << "parity: index dimension " << s.d << " does not match space dimension " << d;
        throw DomainError(os.str());
    }
    const std::size_t n = space->size();
    std::vector<double> values(n);
    for (std::size_t b = 0; b < n; ++b)
        values[b] = static_cast<double>(parity_sign(s.mask, b));
    return FuncVec(space, std::move(values));
}

std::vector<FuncVec> all_parities(const SpacePtr& space) {
    const int d = require_cube(space);
    const std::uint64_t n = std::uint64_t{1} << d;
    check_family_capacity(n, n, "all_parities");
    std::vector<FuncVec> out;
    out.reserve(n);
    for (std::uint64_t mask = 0; mask < n; ++mask)
        out.push_back(parity(space, ParityIndex(d, mask)));
    return out;
}

std::vector<FuncVec> k_sparse_parities(const SpacePtr& space, int k) {
    const int d = require_cube(space);
    if (k < 0 || k > d) throw DomainError("k_sparse_parities: k must lie in [0, d]");
    check_family_capacity(binomial(d, k), space->size(), "k_sparse_parities");
    std::vector<FuncVec> out;
    out.reserve(binomial(d, k));
    if (k == 0) {
        out.push_back(parity(space, ParityIndex(d, 0)));
        return out;
    }
    // Gosper's hack: next mask with the same popcount, ascending.
    const std::uint64_t limit = std::uint64_t{1} << d;
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    while (mask < limit) {
        out.push_back(parity(space, ParityIndex(d, mask)));
        const std::uint64_t c = mask & (~mask + 1);
        const std::uint64_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    return out;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        // result always holds C(n-k+i-1, i-1) exactly, so the division below
        // is integral; only the intermediate product can overflow.
        const std::uint64_t factor = static_cast<std::uint64_t>(n) - k + i;
        std::uint64_t product = 0;
        if (__builtin_mul_overflow(result, factor, &product))
            throw DomainError("binomial: value does not fit in 64 bits");
        result = product / static_cast<std::uint64_t>(i);
    }
    return result;
}

void fwht_unnormalized(std::vector<double>& values) {
    const std::size_t n = values.size();
    if (n == 0 || !std::has_single_bit(n))
        throw DomainError("fwht: length must be a power of two");
    for (std::size_t len = 1; len < n; len <<= 1) {
        for (std::size_t block = 0; block < n; block += len << 1) {
            for (std::size_t j = block; j < block + len; ++j) {
                const double a = values[j];
                const double b = values[j + len];
                values[j] = a + b;
                values[j + len] = a - b;
            }
        }
    }
}

std::vector<double> fourier_coefficients(const FuncVec& f) {
    const int d = require_cube(f.space());
    std::vector<double> coeffs = f.values();
    fwht_unnormalized(coeffs);
    const double scale = std::ldexp(1.0, -d); // exact power-of-two scaling
    for (double& c : coeffs) c *= scale;
    return coeffs;
}

FuncVec synthesize(const SpacePtr& space, const std::vector<double>& coefficients) {
    require_cube(space);
    if (coefficients.size() != space->size())
        throw DomainError("synthesize: coefficient vector length must equal the space size");
    std::vector<double> values = coefficients;
    fwht_unnormalized(values);
    return FuncVec(space, std::move(values));
}

std::vector<double> fwht_self_inverse(std::vector<double> values) {
    fwht_unnormalized(values);
    const double scale = 1.0 / std::sqrt(static_cast<double>(values.size()));
    for (double& v : values) v *= scale;
    return values;
}

} // namespace dimwall::cube

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "dimwall/cube.hpp"
#include "dimwall/errors.hpp"
#include "dimwall/hilbert.hpp"
#include "support/helpers.hpp"

using namespace dimwall;
using namespace testkit;
namespace h = dimwall::hilbert;

namespace {

// Naive quadratic transform: one weighted inner product per character.
std::vector<double> naive_coefficients(const FuncVec& f) {
    const int d = *cube::cube_dim(*f.space());
    std::vector<double> out(f.size());
    for (std::uint64_t mask = 0; mask < f.size(); ++mask)
        out[mask] = h::inner_product(cube::parity(f.space(), cube::ParityIndex(d, mask)), f);
    return out;
}

} // namespace

TEST_SUITE("cube") {

TEST_CASE("hypercube_space dimensions and weights") {
    auto s1 = cube::hypercube_space(1);
    CHECK(s1->size() == 2);
    CHECK(s1->weight(0) == 0.5);
    CHECK(s1->weight(1) == 0.5);

    auto s3 = cube::hypercube_space(3);
    CHECK(s3->size() == 8);
    double sum = 0.0;
    for (std::size_t i = 0; i < 8; ++i) sum += s3->weight(i);
    CHECK(sum == 1.0);

    CHECK(cube::hypercube_space(10)->size() == 1024);
}

TEST_CASE("hypercube_space capacity errors name the memory cost") {
    CHECK_THROWS_AS(cube::hypercube_space(0), DomainError);
    CHECK_THROWS_AS(cube::hypercube_space(21), CapacityError);
    try {
        cube::hypercube_space(30);
    } catch (const CapacityError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("GiB") != std::string::npos);
        CHECK(msg.find("2^30") != std::string::npos);
    }
}

TEST_CASE("canonical coordinate convention: +1 iff the bit is clear") {
    auto space = cube::hypercube_space(2);
    REQUIRE(space->has_geometry());
    CHECK(space->point(0)[0] == 1.0);
    CHECK(space->point(0)[1] == 1.0);
    CHECK(space->point(1)[0] == -1.0); // bit 0 set -> first coordinate flipped
    CHECK(space->point(1)[1] == 1.0);
    CHECK(space->point(2)[0] == 1.0);
    CHECK(space->point(2)[1] == -1.0);
    CHECK(space->point(3)[0] == -1.0);
    CHECK(space->point(3)[1] == -1.0);
}

TEST_CASE("cube_dim detects canonical hypercubes only") {
    CHECK(cube::cube_dim(*cube::hypercube_space(4)) == 4);
    CHECK(!cube::cube_dim(*uniform_space(3)).has_value());       // not a power of two
    std::mt19937_64 gen(201);
    CHECK(!cube::cube_dim(*random_space(gen, 8)).has_value());   // non-uniform weights
}

TEST_CASE("parity: empty set is the constant one") {
    auto space = cube::hypercube_space(3);
    const auto f = cube::parity(space, cube::ParityIndex(3, 0));
    for (std::size_t i = 0; i < 8; ++i) CHECK(f[i] == 1.0);
}

TEST_CASE("parity: direct product evaluation") {
    // S = {1,3} on d = 4, evaluated at x = (-1, +1, -1, +1).
    auto space = cube::hypercube_space(4);
    const auto f = cube::parity(space, cube::ParityIndex(4, 0b0101));
    const std::uint64_t x = 0b0101; // bits 0 and 2 set -> coordinates 1 and 3 are -1
    CHECK(space->point(x)[0] == -1.0);
    CHECK(space->point(x)[1] == 1.0);
    CHECK(space->point(x)[2] == -1.0);
    CHECK(space->point(x)[3] == 1.0);
    CHECK(f[x] == 1.0); // (-1) * (-1)
}

TEST_CASE("parity: exhaustive orthogonality on d = 4") {
    auto space = cube::hypercube_space(4);
    const auto chars = cube::all_parities(space);
    REQUIRE(chars.size() == 16);
    for (std::size_t i = 0; i < 16; ++i)
        for (std::size_t j = 0; j < 16; ++j)
            CHECK(h::inner_product(chars[i], chars[j]) == (i == j ? 1.0 : 0.0));
}

TEST_CASE("parity dimension mismatch") {
    auto space = cube::hypercube_space(3);
    CHECK_THROWS_AS(cube::parity(space, cube::ParityIndex(4, 1)), DomainError);
    CHECK_THROWS_AS(cube::parity(uniform_space(6), cube::ParityIndex(3, 1)), DomainError);
}

TEST_CASE("ParityIndex validation and sparsity") {
    CHECK_THROWS_AS(cube::ParityIndex(3, 0b1000), DomainError);
    CHECK_THROWS_AS(cube::ParityIndex(0, 0), DomainError);
    CHECK(cube::ParityIndex(5, 0b10110).sparsity() == 3);
}

TEST_CASE("all_parities form an orthonormal family for every d up to 6") {
    for (int d = 1; d <= 6; ++d) {
        auto space = cube::hypercube_space(d);
        const auto chars = cube::all_parities(space);
        const auto n = static_cast<Eigen::Index>(std::size_t{1} << d);
        REQUIRE(std::ssize(chars) == n);
        const Eigen::MatrixXd g = h::gram(chars);
        CHECK((g - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-12);
        for (Eigen::Index i = 0; i < n; ++i) CHECK(g(i, i) == 1.0); // exact energy
    }
}

TEST_CASE("k_sparse_parities counts and masks") {
    auto s10 = cube::hypercube_space(10);
    CHECK(cube::k_sparse_parities(s10, 2).size() == 45);

    auto s12 = cube::hypercube_space(12);
    const auto sparse = cube::k_sparse_parities(s12, 2);
    REQUIRE(sparse.size() == 66);
    // Pairwise orthonormal (entrywise Gram oracle), hence zero coherence.
    for (std::size_t i = 0; i < sparse.size(); ++i)
        for (std::size_t j = i; j < sparse.size(); ++j)
            CHECK(h::inner_product(sparse[i], sparse[j]) == (i == j ? 1.0 : 0.0));
}

TEST_CASE("k_sparse_parities masks ascend with exact popcount") {
    auto space = cube::hypercube_space(6);
    for (int k = 0; k <= 6; ++k) {
        const auto fs = cube::k_sparse_parities(space, k);
        CHECK(fs.size() == cube::binomial(6, k));
        // Recover masks by reading the transform of each character.
        std::uint64_t previous = 0;
        bool first = true;
        for (const auto& f : fs) {
            const auto coeffs = cube::fourier_coefficients(f);
            std::uint64_t mask = 0;
            for (std::uint64_t s = 0; s < coeffs.size(); ++s)
                if (std::fabs(coeffs[s] - 1.0) < 1e-9) mask = s;
            CHECK(std::popcount(mask) == k);
            if (!first) CHECK(mask > previous);
            previous = mask;
            first = false;
        }
    }
    CHECK_THROWS_AS(cube::k_sparse_parities(space, 7), DomainError);
    CHECK_THROWS_AS(cube::k_sparse_parities(space, -1), DomainError);
}

TEST_CASE("sparsity classes partition the full character set") {
    auto space = cube::hypercube_space(6);
    std::set<std::uint64_t> seen;
    std::size_t total = 0;
    for (int k = 0; k <= 6; ++k) {
        for (const auto& f : cube::k_sparse_parities(space, k)) {
            const auto coeffs = cube::fourier_coefficients(f);
            for (std::uint64_t s = 0; s < coeffs.size(); ++s)
                if (std::fabs(coeffs[s] - 1.0) < 1e-9) seen.insert(s);
            ++total;
        }
    }
    CHECK(total == 64);
    CHECK(seen.size() == 64);
}

TEST_CASE("binomial") {
    CHECK(cube::binomial(10, 2) == 45);
    CHECK(cube::binomial(12, 2) == 66);
    CHECK(cube::binomial(20, 10) == 184756);
    CHECK(cube::binomial(5, 0) == 1);
    CHECK(cube::binomial(5, 6) == 0);
}

TEST_CASE("fourier_coefficients of the constant and of characters") {
    auto space = cube::hypercube_space(4);
    FuncVec one(space, std::vector<double>(16, 1.0));
    const auto c0 = cube::fourier_coefficients(one);
    for (std::uint64_t s = 0; s < 16; ++s) CHECK(c0[s] == (s == 0 ? 1.0 : 0.0));

    const auto chi = cube::parity(space, cube::ParityIndex(4, 0b1010));
    const auto c1 = cube::fourier_coefficients(chi);
    for (std::uint64_t s = 0; s < 16; ++s) CHECK(c1[s] == (s == 0b1010 ? 1.0 : 0.0));
}

TEST_CASE("fast transform matches the naive quadratic oracle") {
    std::mt19937_64 gen(202);
    for (int d = 1; d <= 8; ++d) {
        auto space = cube::hypercube_space(d);
        auto f = random_func(space, gen);
        const auto fast = cube::fourier_coefficients(f);
        const auto slow = naive_coefficients(f);
        for (std::size_t s = 0; s < fast.size(); ++s)
            CHECK(std::fabs(fast[s] - slow[s]) <= 1e-10);
    }
}

TEST_CASE("self-inverse normalization is an involution") {
    std::mt19937_64 gen(203);
    for (int d : {1, 3, 6}) {
        auto space = cube::hypercube_space(d);
        auto f = random_func(space, gen);
        const auto twice = cube::fwht_self_inverse(cube::fwht_self_inverse(f.values()));
        for (std::size_t i = 0; i < f.size(); ++i) CHECK(std::fabs(twice[i] - f[i]) <= 1e-10);
    }
}

TEST_CASE("synthesize inverts fourier_coefficients") {
    std::mt19937_64 gen(204);
    auto space = cube::hypercube_space(7);
    auto f = random_func(space, gen);
    const auto back = cube::synthesize(space, cube::fourier_coefficients(f));
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(std::fabs(back[i] - f[i]) <= 1e-10);
}

TEST_CASE("property: Parseval on the cube") {
    std::mt19937_64 gen(205);
    for (int d : {2, 5, 8}) {
        auto space = cube::hypercube_space(d);
        for (int iter = 0; iter < 5; ++iter) {
            auto f = random_func(space, gen);
            const auto coeffs = cube::fourier_coefficients(f);
            double energy = 0.0;
            for (double c : coeffs) energy += c * c;
            CHECK(energy == doctest::Approx(h::norm_sq(f)).epsilon(1e-9));
        }
    }
}

TEST_CASE("transform requires a canonical hypercube space") {
    std::mt19937_64 gen(206);
    auto space = random_space(gen, 8);
    auto f = random_func(space, gen);
    CHECK_THROWS_AS(cube::fourier_coefficients(f), DomainError);
    CHECK_THROWS_AS(dimwall::cube::all_parities(space), DomainError);
}

TEST_CASE("HypercubePoint round-trips through its index") {
    CHECK_THROWS_AS(cube::HypercubePoint(2, {1, 0}), DomainError);
    CHECK_THROWS_AS(cube::HypercubePoint(2, {1}), DomainError);
    for (std::uint64_t idx = 0; idx < 16; ++idx) {
        const auto p = cube::HypercubePoint::from_index(4, idx);
        CHECK(p.index() == idx);
        for (int i = 0; i < 4; ++i) CHECK(p.coord(i) == ((idx >> i) & 1 ? -1 : 1));
    }
    const auto base = cube::HypercubePoint::all_ones(3);
    const auto flipped = base.with_flipped(1);
    CHECK(flipped.coord(0) == 1);
    CHECK(flipped.coord(1) == -1);
    CHECK(flipped.coord(2) == 1);
}

} // TEST_SUITE

// Acceptance suite: one criterion per function, each printing a single
// PASS/FAIL line with its runtime. Every tolerance is pinned in code. Run
// with no arguments for all criteria, or pass criterion numbers to run a
// subset. The exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dimwall/bound.hpp"
#include "dimwall/cube.hpp"
#include "dimwall/experiments.hpp"
#include "dimwall/hilbert.hpp"
#include "dimwall/kernel.hpp"
#include "dimwall/mq.hpp"
#include "dimwall/rng.hpp"
#include "support/helpers.hpp"

using namespace dimwall;
using namespace testkit;
namespace h = dimwall::hilbert;
namespace kx = dimwall::kernel;
namespace fs = std::filesystem;

namespace {

struct Criterion {
    int number;
    std::string summary;
    double budget_seconds;
    std::function<void(std::string&)> body; // appends failure details
};

// --- criterion 1: equality case across ranks -------------------------------

void criterion_equality_case(std::string& fail) {
    const std::uint64_t master = 0xd1a10001;
    for (const int d : {4, 6, 8}) {
        const auto space = cube::hypercube_space(d);
        const auto phis = cube::all_parities(space);
        const std::size_t family = phis.size();
        const double tol = 1e-8 * static_cast<double>(family);

        for (int i = 0; i < 50; ++i) {
            const std::size_t rank = i * family / 49;
            std::mt19937_64 gen(
                rng::derive_seed(master, static_cast<std::uint64_t>(d) * 100 + i));

            Subspace w = [&]() {
                if (i % 2 == 0) {
                    // random subset of characters, exactly `rank` of them
                    std::vector<std::uint64_t> masks(family);
                    for (std::size_t m = 0; m < family; ++m) masks[m] = m;
                    for (std::size_t m = 0; m < rank; ++m)
                        std::swap(masks[m], masks[m + gen() % (family - m)]);
                    std::vector<FuncVec> basis;
                    for (std::size_t m = 0; m < rank; ++m)
                        basis.push_back(cube::parity(space, cube::ParityIndex(d, masks[m])));
                    return Subspace::orthonormal(space, std::move(basis));
                }
                // random combinations of characters, orthonormalized
                return random_subspace(space, gen, rank);
            }();

            const double r = static_cast<double>(w.rank());
            const double eps = bound::mean_residual_sq(phis, w);
            const double gap = std::fabs(r - static_cast<double>(family) * (1.0 - eps));
            if (gap > tol) {
                std::ostringstream os;
                os << "d=" << d << " rank=" << w.rank() << ": |r - N(1-eps)| = " << gap;
                fail = os.str();
                return;
            }
        }
    }
}

// --- criterion 2: the inequality on random non-orthonormal families --------

void criterion_random_families(std::string& fail) {
    std::mt19937_64 gen(0xd1a10002);
    for (int instance = 0; instance < 500; ++instance) {
        const std::size_t m = 4 + gen() % 61;       // space size 4..64
        const std::size_t n = 1 + gen() % 16;       // up to 16 unit functions
        const std::size_t rank = gen() % (m + 1);   // random subspace rank
        const auto space = random_space(gen, m);
        const auto phis = random_unit_funcs(space, gen, n);
        const Subspace w = random_subspace(space, gen, rank);
        const auto rep = bound::dimension_bound_report(phis, w);
        if (rep.slack < -1e-9 * static_cast<double>(n)) {
            std::ostringstream os;
            os << "instance " << instance << ": slack = " << rep.slack;
            fail = os.str();
            return;
        }
    }
}

// --- criterion 3: the kernel wall at d = 10 --------------------------------

void criterion_kernel_wall(std::string& fail) {
    const int d = 10;
    const auto space = cube::hypercube_space(d);
    const auto phis = cube::all_parities(space);
    const double family = 1024.0;
    std::uint64_t counter = 0;

    for (const auto& spec : kx::builtin_kernels(d)) {
        for (const std::size_t n : {64u, 256u, 512u}) {
            const auto xs =
                kx::sample_points_iid(*space, n, rng::derive_seed(0xd1a10003, counter++));
            const Subspace w = kx::method_subspace(spec, xs, space);
            const double eps = bound::mean_residual_sq(phis, w);
            if (eps < 1.0 - static_cast<double>(n) / family - 1e-9) {
                std::ostringstream os;
                os << spec.name << " n=" << n << ": eps = " << eps << " below the wall "
                   << 1.0 - static_cast<double>(n) / family;
                fail = os.str();
                return;
            }
            const double needed =
                kx::sample_size_lower_bound(phis.size(), std::min(eps, 1.0));
            if (needed > static_cast<double>(n) + 1e-6 * family) {
                std::ostringstream os;
                os << spec.name << " n=" << n << ": lower bound " << needed << " exceeds n";
                fail = os.str();
                return;
            }
        }
    }
}

// --- criterion 4: the sparse wall at d = 12, k = 2 --------------------------

void criterion_sparse_wall(std::string& fail) {
    const int d = 12, k = 2;
    const auto space = cube::hypercube_space(d);
    const auto phis = cube::k_sparse_parities(space, k);
    const std::size_t n = 33; // half of C(12,2) = 66
    const auto spec = kx::kernel_by_name("gaussian", d);

    std::vector<std::pair<std::string, std::vector<std::size_t>>> designs;
    {
        std::vector<std::size_t> det(n);
        for (std::size_t i = 0; i < n; ++i) det[i] = i * space->size() / n;
        designs.emplace_back("deterministic", std::move(det));
    }
    designs.emplace_back("iid", kx::sample_points_iid(*space, n, 0xd1a10004));

    for (const auto& [name, xs] : designs) {
        const Subspace w = kx::method_subspace(spec, xs, space);
        const double eps = bound::mean_residual_sq(phis, w);
        if (eps < 0.5 - 1e-9) {
            std::ostringstream os;
            os << name << " design: eps = " << eps << " below 0.5";
            fail = os.str();
            return;
        }
    }
}

// --- criterion 5: the Bessel-type inequality sweep --------------------------

void criterion_boas_bellman(std::string& fail) {
    std::mt19937_64 gen(0xd1a10005);
    std::size_t near_equality = 0;
    for (int instance = 0; instance < 1000; ++instance) {
        bound::BoasBellmanResult r;
        if (instance == 0) {
            // the tight single-vector case, included by construction
            auto space = random_space(gen, 4);
            auto phi = random_unit_func(space, gen);
            r = bound::boas_bellman_check(phi, {phi});
        } else {
            const std::size_t m = 2 + gen() % 9;
            const std::size_t n = 1 + gen() % 12;
            auto space = random_space(gen, m);
            auto g = random_func(space, gen, -2.0, 2.0);
            r = bound::boas_bellman_check(g, random_funcs(space, gen, n));
        }
        if (!r.holds) {
            std::ostringstream os;
            os << "instance " << instance << ": lhs = " << r.lhs << " rhs = " << r.rhs;
            fail = os.str();
            return;
        }
        if (r.rhs - r.lhs <= 1e-6 * std::max(1.0, r.rhs)) ++near_equality;
    }
    if (near_equality < 1) fail = "no instance came within 1e-6 of equality";
}

// --- criterion 6: transform equivalence -------------------------------------

void criterion_wht(std::string& fail) {
    std::mt19937_64 gen(0xd1a10006);
    for (int i = 0; i < 20; ++i) {
        const int d = 1 + i % 8;
        const auto space = cube::hypercube_space(d);
        const auto f = random_func(space, gen);

        const auto fast = cube::fourier_coefficients(f);
        for (std::uint64_t mask = 0; mask < f.size(); ++mask) {
            const double naive =
                h::inner_product(cube::parity(space, cube::ParityIndex(d, mask)), f);
            if (std::fabs(fast[mask] - naive) > 1e-10) {
                std::ostringstream os;
                os << "d=" << d << " mask=" << mask << ": fast " << fast[mask] << " vs naive "
                   << naive;
                fail = os.str();
                return;
            }
        }
        const auto twice = cube::fwht_self_inverse(cube::fwht_self_inverse(f.values()));
        for (std::size_t p = 0; p < f.size(); ++p) {
            if (std::fabs(twice[p] - f[p]) > 1e-10) {
                std::ostringstream os;
                os << "d=" << d << ": involution broke at point " << p;
                fail = os.str();
                return;
            }
        }
    }
}

// --- criterion 7: the membership-query separation ----------------------------

void criterion_mq_separation(std::string& fail) {
    const int d = 16;
    const std::uint64_t trials = 200;

    const auto noiseless_plan = mq::parity_query_plan(d, 1);
    if (noiseless_plan.total_requests() != 17) {
        fail = "noiseless plan must ask exactly 17 queries";
        return;
    }
    const std::uint64_t exact = mq::recovery_count(d, 0.0, 1, trials, 0xd1a10007);
    if (exact != trials) {
        std::ostringstream os;
        os << "noiseless recovery " << exact << "/" << trials;
        fail = os.str();
        return;
    }

    const std::uint64_t noisy = mq::recovery_count(d, 0.2, 25, trials, 0xd1a10017);
    const double noisy_rate = static_cast<double>(noisy) / static_cast<double>(trials);
    if (noisy_rate < 0.95) {
        std::ostringstream os;
        os << "noisy recovery rate " << noisy_rate << " below 0.95";
        fail = os.str();
        return;
    }

    const std::uint64_t noisy_queries = mq::parity_query_plan(d, 25).total_requests(); // 425
    const double kernel_needs = kx::sample_size_lower_bound(1ULL << d, 0.1);
    if (!(kernel_needs >= 0.9 * 65536.0 - 1e-6)) {
        fail = "kernel wall at eps = 0.1 must be at least 0.9 * 65536";
        return;
    }
    if (!(static_cast<double>(noisy_queries) < kernel_needs)) {
        fail = "the MQ learner must use fewer queries than the kernel wall";
        return;
    }
    std::printf("      [mq %llu queries at eta=0.2 vs kernel wall %.1f samples at eps=0.1]\n",
                static_cast<unsigned long long>(noisy_queries), kernel_needs);
}

// --- criterion 8: end-to-end reproducibility --------------------------------

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void criterion_reproducibility(std::string& fail) {
    namespace x = dimwall::experiments;
    const fs::path root = fs::temp_directory_path() / "dimwall-acceptance";
    fs::remove_all(root);

    struct Small {
        const char* experiment;
        int d, k;
        long long n, trials;
    };
    const Small configs[] = {
        {"theorem-check", 3, 0, 0, 5},
        {"kernel-wall", 7, 0, 24, 2},
        {"sparse-wall", 8, 2, 14, 1},
        {"mq-demo", 10, 0, 7, 80},
        {"separation", 12, 0, 5, 80},
    };
    for (const auto& c : configs) {
        std::string csv_bytes[2];
        for (int rep = 0; rep < 2; ++rep) {
            x::ExperimentConfig cfg;
            cfg.experiment = c.experiment;
            cfg.d = c.d;
            cfg.k = c.k;
            if (c.n > 0) cfg.n = c.n;
            cfg.trials = c.trials;
            cfg.seed = 0xd1a10008;
            const fs::path out = root / (std::string(c.experiment) + "-" + std::to_string(rep));
            cfg.out = out.string();
            if (x::run(cfg) != 0) {
                fail = std::string(c.experiment) + ": run failed";
                return;
            }
            csv_bytes[rep] = slurp(out / "results.csv");
        }
        if (csv_bytes[0].empty() || csv_bytes[0] != csv_bytes[1]) {
            fail = std::string(c.experiment) + ": results.csv differs between identical runs";
            return;
        }
    }
}

} // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "equality case across ranks (d in {4,6,8}, 50 subspaces each)", 10.0,
         criterion_equality_case},
        {2, "dimension inequality on 500 random non-orthonormal families", 30.0,
         criterion_random_families},
        {3, "kernel wall at d = 10 for every builtin kernel, n in {64,256,512}", 120.0,
         criterion_kernel_wall},
        {4, "sparse wall at d = 12, k = 2, n = 33 (deterministic and iid)", 60.0,
         criterion_sparse_wall},
        {5, "Bessel-type inequality on 1000 random instances with a tight case", 5.0,
         criterion_boas_bellman},
        {6, "fast transform vs naive transform and involution, d <= 8", 5.0, criterion_wht},
        {7, "membership-query separation at d = 16", 30.0, criterion_mq_separation},
        {8, "byte-identical reruns of every experiment", 300.0, criterion_reproducibility},
    };

    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

    int failures = 0;
    for (const auto& c : criteria) {
        if (!selected.empty() &&
            std::find(selected.begin(), selected.end(), c.number) == selected.end())
            continue;
        std::string fail;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(fail);
        } catch (const std::exception& e) {
            fail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (fail.empty() && seconds > c.budget_seconds) {
            std::ostringstream os;
            os << "runtime " << seconds << "s exceeded the " << c.budget_seconds << "s budget";
            fail = os.str();
        }
        if (fail.empty()) {
            std::printf("PASS  criterion %d  (%6.2fs)  %s\n", c.number, seconds,
                        c.summary.c_str());
        } else {
            std::printf("FAIL  criterion %d  (%6.2fs)  %s\n      %s\n", c.number, seconds,
                        c.summary.c_str(), fail.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    return failures;
}

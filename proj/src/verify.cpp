#include "alspec/verify.hpp"

#include "alspec/baseline.hpp"
#include "alspec/fastpath.hpp"
#include "alspec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace alspec::verify {

namespace {

std::vector<DenseFactor> factors(std::initializer_list<std::pair<int, int>> list)
{
    std::vector<DenseFactor> out;
    for (const auto& [p, q] : list) out.push_back(make_dense_factor(p, q));
    return out;
}

// Calls fn(n, alpha, seed) for every valid combination and folds the returned error into the suite.
template <typename Fn>
SuiteResult sweep(std::string name, double tolerance, const VerifyOptions& options, const std::vector<DenseFactor>& alphas,
                  std::int64_t max_n, Fn&& fn)
{
    SuiteResult suite{std::move(name), tolerance, 0.0, 0, {}};
    for (const auto n : options.sizes) {
        if (n > max_n) continue;
        for (const auto& alpha : alphas) {
            if (n % alpha.q() != 0) continue;
            for (int s = 0; s < options.seeds; ++s) {
                const auto seed = options.seed + static_cast<std::uint64_t>(s);
                const double err = fn(n, alpha, seed);
                ++suite.cases;
                suite.max_error = std::max(suite.max_error, err);
                if (!(err <= tolerance)) suite.failures.push_back({n, alpha, seed, err});
            }
        }
    }
    return suite;
}

constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max();

}  // namespace

double relative_max_error(const Samples& a, const Samples& b)
{
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double diff = 0.0;
    double scale = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        diff = std::max(diff, std::abs(a[i] - b[i]));
        scale = std::max(scale, std::abs(b[i]));
    }
    return scale > 0.0 ? diff / scale : diff;
}

double absolute_max_error(const Samples& a, const Samples& b)
{
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double diff = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) diff = std::max(diff, std::abs(a[i] - b[i]));
    return diff;
}

Samples random_unit_disk(std::int64_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(n));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Samples x(static_cast<std::size_t>(n));
    for (auto& v : x) v = std::polar(std::sqrt(unit(rng)), 2.0 * std::numbers::pi * unit(rng));
    return x;
}

SuiteResult oracle_equivalence(const VerifyOptions& options)
{
    const auto alphas = factors({{1, 8}, {1, 4}, {1, 2}, {1, 1}, {2, 1}, {4, 1}, {8, 1}});
    return sweep("oracle_equivalence", kOracleRelTol, options, alphas, kUnbounded,
                 [&](std::int64_t n, const DenseFactor& alpha, std::uint64_t seed) {
                     const Signal x(random_unit_disk(n, seed));
                     auto fast = fastpath::alpha_fft(x, alpha).bins();
                     if (options.inject_fault) fast.back() += Complex{1e-6, 0.0};
                     return relative_max_error(fast, oracle::naive_forward(x, alpha).bins());
                 });
}

SuiteResult zero_pad_equivalence(const VerifyOptions& options)
{
    const auto alphas = factors({{1, 1}, {2, 1}, {4, 1}, {8, 1}});
    return sweep("zero_pad_equivalence", kZeroPadAbsTol, options, alphas, 512,
                 [](std::int64_t n, const DenseFactor& alpha, std::uint64_t seed) {
                     const Signal x(random_unit_disk(n, seed));
                     return absolute_max_error(fastpath::alpha_fft(x, alpha).bins(),
                                               baseline::zero_padded_fft(x, alpha).bins());
                 });
}

SuiteResult round_trip(const VerifyOptions& options)
{
    const auto alphas = factors({{1, 1}, {2, 1}, {4, 1}});
    return sweep("round_trip", kRoundTripTol, options, alphas, kUnbounded,
                 [](std::int64_t n, const DenseFactor& alpha, std::uint64_t seed) {
                     const Signal x(random_unit_disk(n, seed));
                     const auto back = oracle::naive_inverse(oracle::naive_forward(x, alpha));
                     return absolute_max_error(back.samples(), x.samples());
                 });
}

SuiteResult aliasing(const VerifyOptions& options)
{
    const auto alphas = factors({{1, 2}, {1, 4}, {1, 8}});
    return sweep("aliasing", kRoundTripTol, options, alphas, kUnbounded,
                 [](std::int64_t n, const DenseFactor& alpha, std::uint64_t seed) {
                     const Signal x(random_unit_disk(n, seed));
                     const auto back = oracle::naive_inverse(oracle::naive_forward(x, alpha)).samples();
                     const auto folded = baseline::aliased_reconstruct(x, alpha);
                     // every n, including the periodic tail n >= alpha N
                     Samples expected(back.size());
                     for (std::size_t i = 0; i < back.size(); ++i) expected[i] = folded[i % folded.size()];
                     return absolute_max_error(back, expected);
                 });
}

SuiteResult orthogonality(const VerifyOptions& options)
{
    const auto alphas = factors({{1, 4}, {1, 2}, {1, 1}, {2, 1}, {4, 1}});
    VerifyOptions single = options;
    single.seeds = 1;  // deterministic kernel; seeds do not apply
    return sweep("orthogonality", kOrthogonalityTol, single, alphas, 64,
                 [](std::int64_t n, const DenseFactor& alpha, std::uint64_t) {
                     const auto m = validate_pair(n, alpha).m;
                     double worst = 0.0;
                     for (const auto& s : oracle::orthogonality_table(n, alpha)) {
                         const double expected = ((s.n - s.l) % m == 0) ? 1.0 : 0.0;
                         worst = std::max(worst, std::abs(s.value - expected));
                     }
                     return worst;
                 });
}

std::vector<SuiteResult> run_all(const VerifyOptions& options)
{
    return {oracle_equivalence(options), zero_pad_equivalence(options), round_trip(options), aliasing(options),
            orthogonality(options)};
}

}  // namespace alspec::verify

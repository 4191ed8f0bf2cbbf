#pragma once

// Self-check suites run by `alpha-spectra verify`: each sweeps (N, alpha) on
// random unit-disk signals and records the worst error against its tolerance.

#include "alspec/core.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace alspec::verify {

inline constexpr double kOracleRelTol = 1e-10;
inline constexpr double kZeroPadAbsTol = 1e-12;
inline constexpr double kRoundTripTol = 1e-10;
inline constexpr double kOrthogonalityTol = 1e-12;

struct Failure {
    std::int64_t n;
    DenseFactor alpha;
    std::uint64_t seed;
    double error;
};

struct SuiteResult {
    std::string name;
    double tolerance = 0.0;
    double max_error = 0.0;
    std::size_t cases = 0;
    std::vector<Failure> failures;

    bool passed() const noexcept { return failures.empty(); }
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    /// Number of seeds per configuration, starting at `seed`.
    int seeds = 1;
    /// Powers of two.
    std::vector<std::int64_t> sizes{2, 4, 8, 16, 32, 64, 128, 256};
    /// Test hook: perturbs the fast-path output so the oracle suite must fail.
    bool inject_fault = false;
};

/// max_m |a_m - b_m| / max_m |b_m|
double relative_max_error(const Samples& a, const Samples& b);
double absolute_max_error(const Samples& a, const Samples& b);

/// Uniform in the unit disk.
Samples random_unit_disk(std::int64_t n, std::uint64_t seed);

SuiteResult oracle_equivalence(const VerifyOptions& options);
SuiteResult zero_pad_equivalence(const VerifyOptions& options);
SuiteResult round_trip(const VerifyOptions& options);
SuiteResult aliasing(const VerifyOptions& options);
SuiteResult orthogonality(const VerifyOptions& options);

std::vector<SuiteResult> run_all(const VerifyOptions& options);

}  // namespace alspec::verify

#pragma once

// Operation-count and wall-time harness for the alpha transform and its
// baselines, plus the count identities that stand in for the asymptotic
// savings claims.

#include "alspec/core.hpp"

#include "json.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace alspec::bench {

enum class Method {
    AlphaFft,    ///< fastpath::alpha_fft
    ZeropadFft,  ///< conventional FFT: zero-padded to alpha N for alpha >= 1, plain N-point for alpha < 1
    Naive,       ///< oracle::naive_forward
};

std::string_view to_string(Method method) noexcept;
/// Accepts "alpha_fft", "zeropad_fft", "naive". Throws InvalidArgument otherwise.
Method parse_method(std::string_view text);

struct BenchRecord {
    std::int64_t n = 0;
    DenseFactor alpha;
    Method method = Method::AlphaFft;
    std::int64_t complex_mults = 0;
    std::int64_t complex_adds = 0;
    /// Minimum over repetitions, seconds.
    double wall_time = 0.0;
    int repetitions = 0;
    /// Deepest recursion level of the instrumented run (0 for the naive method).
    int depth = 0;
    /// Set when the configuration is not valid for the method; counts are then meaningless.
    std::optional<std::string> skipped;

    std::int64_t spectrum_length() const { return n / alpha.q() * alpha.p(); }
};

struct GridOptions {
    int repetitions = 20;
    /// Upper bound on repetitions for the naive method, whose single run can take seconds.
    int naive_repetitions = 3;
    /// Workers for the untimed counting pass; timed sections always run on the calling thread.
    unsigned threads = 1;
    std::uint64_t seed = 1;
};

/// Worker cap from ALPHA_SPECTRA_THREADS (defaults to 1 when unset or malformed).
unsigned threads_from_env();

/// One record per (N, alpha, method). Invalid pairs are returned as skipped records.
std::vector<BenchRecord> run_grid(std::span<const std::int64_t> ns, std::span<const DenseFactor> alphas,
                                  std::span<const Method> methods, const GridOptions& options = {});

/// Raised when a grid does not contain what a claim check needs.
class ReportIncomplete : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class VerdictStatus { Pass, Warn, Fail, Incomplete };

std::string_view to_string(VerdictStatus status) noexcept;

struct ClaimVerdict {
    std::string claim;
    VerdictStatus status = VerdictStatus::Pass;
    /// Indices into the record list the verdict was computed from.
    std::vector<std::size_t> records;
    std::vector<std::string> warnings;
    std::vector<std::string> failures;
    /// Claim-specific statistic, e.g. gap / (alpha N log2 alpha) or the fitted constant.
    double fitted_ratio = 0.0;
    double max_relative_residual = 0.0;

    bool passed() const noexcept { return status == VerdictStatus::Pass || status == VerdictStatus::Warn; }
};

/// count(zeropad) - count(alpha) == (alpha N / 2) log2 alpha for every alpha >= 1 pair;
/// strictly positive for alpha > 1.
ClaimVerdict check_alpha_gt1_savings(std::span<const BenchRecord> records);

/// count(fft of N) - count(alpha) == (N/2) log2 N - (alpha N/2) log2(alpha N) for every alpha <= 1 pair
/// with alpha N >= 16, and the gap is at least (N/2) log2(1/alpha). Pairs below 16 bins are excluded with a
/// warning.
ClaimVerdict check_alpha_lt1_savings(std::span<const BenchRecord> records);

inline constexpr std::int64_t kMinSpectrumBins = 16;

struct FitResult {
    double coefficient = 0.0;
    double max_relative_residual = 0.0;
    std::size_t points = 0;
    bool pass = false;
    std::vector<std::size_t> records;
};

enum class CostModel {
    /// alpha N * log2 min(N, alpha N): spectrum length times recursion depth
    OutputWidth,
    /// max(N, alpha N) * log2 min(N, alpha N); equals OutputWidth for alpha >= 1
    MaxWidth,
};

/// Least-squares fit of measured multiplies to c * model(N, alpha).
/// Passes when the max relative residual is <= 1%.
FitResult fit_complexity(std::span<const BenchRecord> records, Method method,
                         CostModel model = CostModel::OutputWidth);

inline constexpr double kFitTolerance = 0.01;

struct ScalingReport {
    std::vector<BenchRecord> records;
    std::vector<ClaimVerdict> verdicts;

    bool any_failed() const;
};

/// Runs every applicable claim check; a check the grid cannot support is reported as Incomplete.
ScalingReport make_report(std::vector<BenchRecord> records);

nlohmann::json to_json(const BenchRecord& record);
nlohmann::json to_json(const ClaimVerdict& verdict);
nlohmann::json to_json(const ScalingReport& report);

/// Columns N,alpha_p,alpha_q,method,mults,adds,wall_ns,reps; skipped records are omitted.
std::string records_csv(std::span<const BenchRecord> records);

}  // namespace alspec::bench

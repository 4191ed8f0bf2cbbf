#include "alspec/bench.hpp"

#include "alspec/baseline.hpp"
#include "alspec/fastpath.hpp"
#include "alspec/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <thread>

namespace alspec::bench {

namespace {

Signal random_signal(std::int64_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> radius(0.0, 1.0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * 3.141592653589793);
    Samples x(static_cast<std::size_t>(n));
    for (auto& v : x) v = std::polar(std::sqrt(radius(rng)), phase(rng));
    return Signal(std::move(x));
}

// A configuration ready to run: the plan (when the method has one) is built
// outside the timed section.
struct Prepared {
    BenchRecord record;
    std::optional<Signal> signal;
    std::optional<fastpath::Plan> plan;
};

std::optional<std::string> why_invalid(std::int64_t n, const DenseFactor& alpha, Method method)
{
    try {
        const auto pair = validate_pair(n, alpha);
        if (method == Method::Naive) return std::nullopt;
        if (!is_power_of_two(pair.n) || !is_power_of_two(pair.m)) {
            return "N and alpha*N must be powers of two for " + std::string(to_string(method));
        }
    } catch (const std::exception& e) {
        return std::string(e.what());
    }
    return std::nullopt;
}

// Runs one transform and returns its counts.
OpCounter execute(const Prepared& prep)
{
    OpCounter counter;
    const auto& rec = prep.record;
    switch (rec.method) {
    case Method::AlphaFft:
        (void)fastpath::alpha_fft(*prep.signal, *prep.plan, counter);
        break;
    case Method::ZeropadFft:
        if (rec.alpha.at_least_one()) {
            (void)baseline::zero_padded_fft(*prep.signal, rec.alpha, counter);
        } else {
            (void)baseline::standard_fft(prep.signal->samples(), counter, prep.signal->duration());
        }
        break;
    case Method::Naive:
        (void)oracle::naive_forward(*prep.signal, rec.alpha, counter);
        break;
    }
    return counter;
}

void count_pass(Prepared& prep)
{
    if (prep.record.skipped) return;
    const auto counter = execute(prep);
    prep.record.complex_mults = counter.complex_mults;
    prep.record.complex_adds = counter.complex_adds;
    prep.record.depth = counter.deepest_level;
}

void timed_pass(Prepared& prep, const GridOptions& options)
{
    auto& rec = prep.record;
    if (rec.skipped) return;
    const int reps = std::max(1, rec.method == Method::Naive ? std::min(options.repetitions, options.naive_repetitions)
                                                              : options.repetitions);
    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < reps; ++r) {
        const auto start = std::chrono::steady_clock::now();
        const auto counter = execute(prep);
        const auto stop = std::chrono::steady_clock::now();
        if (counter.complex_mults != rec.complex_mults || counter.complex_adds != rec.complex_adds) {
            throw std::logic_error("operation counts changed between repetitions");
        }
        best = std::min(best, std::chrono::duration<double>(stop - start).count());
    }
    rec.wall_time = std::max(best, 1e-9);
    rec.repetitions = reps;
}

std::int64_t log2_alpha_magnitude(const DenseFactor& alpha)
{
    return alpha.at_least_one() ? log2_exact(alpha.p() / alpha.q()) : log2_exact(alpha.q() / alpha.p());
}

struct Pair {
    std::size_t alpha_idx;
    std::size_t baseline_idx;
};

// Pairs of (alpha_fft, zeropad_fft) records sharing (N, alpha), selected by `keep`.
template <typename Keep>
std::vector<Pair> pair_records(std::span<const BenchRecord> records, Keep keep)
{
    std::map<std::pair<std::int64_t, std::pair<std::int64_t, std::int64_t>>, Pair> by_config;
    constexpr auto none = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        if (r.skipped || !keep(r) || r.method == Method::Naive) continue;
        auto [it, _] = by_config.try_emplace({r.n, {r.alpha.p(), r.alpha.q()}}, Pair{none, none});
        (r.method == Method::AlphaFft ? it->second.alpha_idx : it->second.baseline_idx) = i;
    }
    std::vector<Pair> pairs;
    for (const auto& [_, pr] : by_config) {
        if (pr.alpha_idx != none && pr.baseline_idx != none) pairs.push_back(pr);
    }
    return pairs;
}

std::string describe(const BenchRecord& r)
{
    return "N=" + std::to_string(r.n) + " alpha=" + r.alpha.to_string();
}

void finish(ClaimVerdict& v)
{
    if (!v.failures.empty()) v.status = VerdictStatus::Fail;
    else if (!v.warnings.empty()) v.status = VerdictStatus::Warn;
    else v.status = VerdictStatus::Pass;
}

}  // namespace

std::string_view to_string(Method method) noexcept
{
    switch (method) {
    case Method::AlphaFft: return "alpha_fft";
    case Method::ZeropadFft: return "zeropad_fft";
    case Method::Naive: return "naive";
    }
    return "?";
}

Method parse_method(std::string_view text)
{
    if (text == "alpha_fft") return Method::AlphaFft;
    if (text == "zeropad_fft") return Method::ZeropadFft;
    if (text == "naive") return Method::Naive;
    throw InvalidArgument("unknown bench method '" + std::string(text) + "'");
}

std::string_view to_string(VerdictStatus status) noexcept
{
    switch (status) {
    case VerdictStatus::Pass: return "pass";
    case VerdictStatus::Warn: return "warn";
    case VerdictStatus::Fail: return "fail";
    case VerdictStatus::Incomplete: return "incomplete";
    }
    return "?";
}

unsigned threads_from_env()
{
    const char* raw = std::getenv("ALPHA_SPECTRA_THREADS");
    if (raw == nullptr) return 1;
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || v < 1) return 1;
    return static_cast<unsigned>(v);
}

std::vector<BenchRecord> run_grid(std::span<const std::int64_t> ns, std::span<const DenseFactor> alphas,
                                  std::span<const Method> methods, const GridOptions& options)
{
    std::vector<Prepared> grid;
    for (const auto n : ns) {
        for (const auto& alpha : alphas) {
            for (const auto method : methods) {
                Prepared prep;
                prep.record.n = n;
                prep.record.alpha = alpha;
                prep.record.method = method;
                prep.record.skipped = why_invalid(n, alpha, method);
                if (!prep.record.skipped) {
                    prep.signal = random_signal(n, options.seed ^ static_cast<std::uint64_t>(n));
                    if (method == Method::AlphaFft) prep.plan = fastpath::plan(n, alpha);
                }
                grid.push_back(std::move(prep));
            }
        }
    }

    // Untimed counting pass, fanned out across workers.
    const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(grid.size())));
    if (workers == 1) {
        for (auto& prep : grid) count_pass(prep);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (auto i = next++; i < grid.size(); i = next++) count_pass(grid[i]);
            });
        }
    }

    std::vector<BenchRecord> records;
    records.reserve(grid.size());
    for (auto& prep : grid) {
        timed_pass(prep, options);
        records.push_back(std::move(prep.record));
    }
    return records;
}

ClaimVerdict check_alpha_gt1_savings(std::span<const BenchRecord> records)
{
    const auto pairs = pair_records(records, [](const BenchRecord& r) { return r.alpha.at_least_one(); });
    const bool any_dense = std::any_of(pairs.begin(), pairs.end(), [&](const Pair& p) {
        return !records[p.alpha_idx].alpha.is_one();
    });
    if (!any_dense) {
        throw ReportIncomplete("alpha > 1 savings check needs alpha_fft and zeropad_fft records with alpha > 1");
    }

    ClaimVerdict v;
    v.claim = "alpha_gt1_savings";
    double ratio_min = std::numeric_limits<double>::infinity();
    double ratio_max = -ratio_min;
    for (const auto& p : pairs) {
        const auto& fast = records[p.alpha_idx];
        const auto& padded = records[p.baseline_idx];
        v.records.push_back(p.alpha_idx);
        v.records.push_back(p.baseline_idx);

        const auto m = fast.spectrum_length();
        const auto k = log2_alpha_magnitude(fast.alpha);
        const auto gap = padded.complex_mults - fast.complex_mults;
        const auto expected = (m / 2) * k;
        if (gap != expected) {
            v.failures.push_back(describe(fast) + ": gap " + std::to_string(gap) + " != (alpha N/2) log2 alpha = " +
                                 std::to_string(expected));
        }
        if (!fast.alpha.is_one()) {
            if (fast.complex_mults >= padded.complex_mults) {
                v.failures.push_back(describe(fast) + ": alpha_fft is not cheaper than zero padding");
            }
            const double ratio = static_cast<double>(gap) / (static_cast<double>(m) * static_cast<double>(k));
            ratio_min = std::min(ratio_min, ratio);
            ratio_max = std::max(ratio_max, ratio);
        }
    }
    // The gap must scale like alpha N log alpha: one constant across the grid.
    v.fitted_ratio = ratio_min;
    v.max_relative_residual = ratio_min > 0.0 ? (ratio_max - ratio_min) / ratio_min : 0.0;
    if (v.max_relative_residual > kFitTolerance) {
        v.failures.push_back("gap / (alpha N log2 alpha) varies across the grid");
    }
    finish(v);
    return v;
}

ClaimVerdict check_alpha_lt1_savings(std::span<const BenchRecord> records)
{
    const auto pairs = pair_records(records, [](const BenchRecord& r) { return !r.alpha.at_least_one() || r.alpha.is_one(); });

    ClaimVerdict v;
    v.claim = "alpha_lt1_savings";
    bool any_sparse = false;
    double ratio_min = std::numeric_limits<double>::infinity();
    for (const auto& p : pairs) {
        const auto& fast = records[p.alpha_idx];
        const auto& full = records[p.baseline_idx];
        const auto m = fast.spectrum_length();
        if (!fast.alpha.is_one() && m < kMinSpectrumBins) {
            v.warnings.push_back(describe(fast) + ": alpha N = " + std::to_string(m) + " < " +
                                 std::to_string(kMinSpectrumBins) + ", excluded");
            continue;
        }
        v.records.push_back(p.alpha_idx);
        v.records.push_back(p.baseline_idx);

        const auto k = log2_alpha_magnitude(fast.alpha);
        const auto gap = full.complex_mults - fast.complex_mults;
        // butterflies run on the alpha N outputs only; the leaves fold blocks with additions
        const auto expected = (fast.n / 2) * log2_exact(fast.n) - (m / 2) * log2_exact(m);
        if (gap != expected) {
            v.failures.push_back(describe(fast) + ": gap " + std::to_string(gap) +
                                 " != (N/2) log2 N - (alpha N/2) log2(alpha N) = " + std::to_string(expected));
        }
        if (gap < (fast.n / 2) * k) {
            v.failures.push_back(describe(fast) + ": gap " + std::to_string(gap) + " below (N/2) log2(1/alpha)");
        }
        if (!fast.alpha.is_one()) {
            any_sparse = true;
            if (fast.complex_mults >= full.complex_mults) {
                v.failures.push_back(describe(fast) + ": alpha_fft is not cheaper than the N-point FFT");
            }
            const double ratio = static_cast<double>(gap) / (static_cast<double>(fast.n) * static_cast<double>(k));
            ratio_min = std::min(ratio_min, ratio);
        }
    }
    if (!any_sparse) {
        throw ReportIncomplete("alpha < 1 savings check needs alpha_fft and zeropad_fft records with alpha < 1 and "
                               "alpha N >= " + std::to_string(kMinSpectrumBins));
    }
    // smallest gap relative to N log2(1/alpha); at least 1/2 whenever every pair passed
    v.fitted_ratio = ratio_min;
    finish(v);
    return v;
}

FitResult fit_complexity(std::span<const BenchRecord> records, Method method, CostModel cost_model)
{
    FitResult fit;
    std::vector<double> model;
    std::vector<double> measured;
    std::vector<std::int64_t> distinct_n;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        if (r.skipped || r.method != method) continue;
        const auto m = r.spectrum_length();
        const auto width = cost_model == CostModel::OutputWidth ? m : std::max(r.n, m);
        const auto shape = static_cast<double>(width) * log2_exact(std::min(r.n, m));
        if (shape <= 0.0) continue;  // single-bin or single-sample transform: nothing to fit
        model.push_back(shape);
        measured.push_back(static_cast<double>(r.complex_mults));
        fit.records.push_back(i);
        if (std::find(distinct_n.begin(), distinct_n.end(), r.n) == distinct_n.end()) distinct_n.push_back(r.n);
    }
    if (distinct_n.size() < 4) {
        throw ReportIncomplete("complexity fit needs at least 4 distinct N for " + std::string(to_string(method)));
    }

    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < model.size(); ++i) {
        num += model[i] * measured[i];
        den += model[i] * model[i];
    }
    fit.coefficient = num / den;
    fit.points = model.size();
    for (std::size_t i = 0; i < model.size(); ++i) {
        const double residual = std::abs(measured[i] - fit.coefficient * model[i]) / measured[i];
        fit.max_relative_residual = std::max(fit.max_relative_residual, residual);
    }
    fit.pass = fit.max_relative_residual <= kFitTolerance;
    return fit;
}

bool ScalingReport::any_failed() const
{
    return std::any_of(verdicts.begin(), verdicts.end(),
                       [](const ClaimVerdict& v) { return v.status == VerdictStatus::Fail; });
}

ScalingReport make_report(std::vector<BenchRecord> records)
{
    ScalingReport report;
    report.records = std::move(records);
    const std::span<const BenchRecord> view(report.records);

    auto guarded = [&](const char* claim, auto&& check) {
        try {
            report.verdicts.push_back(check());
        } catch (const ReportIncomplete& e) {
            ClaimVerdict v;
            v.claim = claim;
            v.status = VerdictStatus::Incomplete;
            v.warnings.push_back(e.what());
            report.verdicts.push_back(std::move(v));
        }
    };
    guarded("alpha_gt1_savings", [&] { return check_alpha_gt1_savings(view); });
    guarded("alpha_lt1_savings", [&] { return check_alpha_lt1_savings(view); });
    guarded("alpha_fft_complexity_fit", [&] {
        const auto fit = fit_complexity(view, Method::AlphaFft);
        ClaimVerdict v;
        v.claim = "alpha_fft_complexity_fit";
        v.records = fit.records;
        v.fitted_ratio = fit.coefficient;
        v.max_relative_residual = fit.max_relative_residual;
        if (!fit.pass) v.failures.push_back("counts do not follow c * alpha N * log2 min(N, alpha N)");
        finish(v);
        return v;
    });
    return report;
}

nlohmann::json to_json(const BenchRecord& record)
{
    nlohmann::json j = {
        {"N", record.n},
        {"alpha", record.alpha.to_string()},
        {"alpha_p", record.alpha.p()},
        {"alpha_q", record.alpha.q()},
        {"method", to_string(record.method)},
    };
    if (record.skipped) {
        j["skipped"] = *record.skipped;
        return j;
    }
    j["complex_mults"] = record.complex_mults;
    j["complex_adds"] = record.complex_adds;
    j["depth"] = record.depth;
    j["wall_time"] = record.wall_time;
    j["repetitions"] = record.repetitions;
    return j;
}

nlohmann::json to_json(const ClaimVerdict& verdict)
{
    return {
        {"claim", verdict.claim},
        {"pass", verdict.passed()},
        {"status", to_string(verdict.status)},
        {"records", verdict.records},
        {"fitted_ratio", verdict.fitted_ratio},
        {"max_relative_residual", verdict.max_relative_residual},
        {"warnings", verdict.warnings},
        {"failures", verdict.failures},
    };
}

nlohmann::json to_json(const ScalingReport& report)
{
    nlohmann::json records = nlohmann::json::array();
    for (const auto& r : report.records) records.push_back(to_json(r));
    nlohmann::json verdicts = nlohmann::json::array();
    for (const auto& v : report.verdicts) verdicts.push_back(to_json(v));
    return {{"records", std::move(records)}, {"verdicts", std::move(verdicts)}};
}

std::string records_csv(std::span<const BenchRecord> records)
{
    std::ostringstream os;
    os << "N,alpha_p,alpha_q,method,mults,adds,wall_ns,reps\n";
    for (const auto& r : records) {
        if (r.skipped) continue;
        os << r.n << ',' << r.alpha.p() << ',' << r.alpha.q() << ',' << to_string(r.method) << ','
           << r.complex_mults << ',' << r.complex_adds << ',' << std::llround(r.wall_time * 1e9) << ','
           << r.repetitions << '\n';
    }
    return os.str();
}

}  // namespace alspec::bench

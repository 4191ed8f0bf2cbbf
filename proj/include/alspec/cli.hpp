#pragma once

// Subcommands of the alpha-spectra tool. Each returns the process exit code
// and reports through the given streams, so they run the same in-process and
// from the command line.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace alspec::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kParseError = 2,
    kIncompatibleAlpha = 3,
    kUnsupportedSize = 4,
    kClaimFailed = 5,
};

struct ComputeArgs {
    std::filesystem::path input;
    /// Empty: write to `out`.
    std::filesystem::path output;
    std::string alpha = "1";
    /// auto | fft | naive | zeropad
    std::string method = "auto";
    std::optional<double> duration;
};

int cmd_compute(const ComputeArgs& args, std::ostream& out, std::ostream& err);

struct DemoArgs {
    std::vector<std::string> alphas{"1", "2", "4", "8"};
    std::int64_t n = 64;
    std::filesystem::path output_dir = ".";
};

/// Writes spectrum_alpha_P_Q.csv (raw), sine_alpha_P_Q.csv (normalized vs analytic),
/// analytic.csv and summary.json into output_dir.
int cmd_demo_sine(const DemoArgs& args, std::ostream& out, std::ostream& err);

struct BenchArgs {
    std::vector<std::string> grid_n{"128", "256", "512", "1024", "2048"};
    std::vector<std::string> grid_alpha{"1/8", "1/4", "1/2", "1", "2", "4", "8"};
    std::vector<std::string> methods{"alpha_fft", "zeropad_fft"};
    int reps = 20;
    std::uint64_t seed = 1;
    /// JSON report; the CSV goes next to it with a .csv extension unless csv_output is set.
    std::filesystem::path output = "bench_report.json";
    std::optional<std::filesystem::path> csv_output;
    /// 0: take ALPHA_SPECTRA_THREADS.
    unsigned threads = 0;
};

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err);

struct VerifyArgs {
    std::uint64_t seed = 1;
    int seeds = 1;
    std::vector<std::int64_t> sizes{2, 4, 8, 16, 32, 64, 128, 256};
    bool inject_fault = false;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);

}  // namespace alspec::cli

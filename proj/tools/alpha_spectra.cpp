// alpha-spectra: spectra on an adjustable frequency-bin interval.
//
//   alpha-spectra compute   --input sig.csv --alpha 2/1 [--method auto|fft|naive|zeropad] [--output out.csv]
//   alpha-spectra demo-sine [--alpha 1,2,4,8] [--n 64] [--output dir]
//   alpha-spectra bench     [--grid-n 128,256] [--grid-alpha 1/2,2] [--methods alpha_fft,zeropad_fft] [--reps 20]
//   alpha-spectra verify    [--seed 1] [--sizes 2,4,8]

#include "alspec/cli.hpp"

#include "CLI11.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    using namespace alspec::cli;

    CLI::App app{"Spectra with an adjustable frequency-bin interval (dense sampling factor alpha)"};
    app.require_subcommand(1);

    ComputeArgs compute;
    auto* c = app.add_subcommand("compute", "Transform a signal file at the given alpha");
    c->add_option("--input,-i", compute.input, "Signal CSV or JSON")->required();
    c->add_option("--output,-o", compute.output, "Spectrum CSV (stdout when omitted)");
    c->add_option("--alpha,-a", compute.alpha, "Dense sampling factor p/q")->capture_default_str();
    c->add_option("--method,-m", compute.method, "auto, fft, naive or zeropad")->capture_default_str();
    c->add_option("--duration", compute.duration, "Record length T in seconds (overrides file metadata)");

    DemoArgs demo;
    auto* d = app.add_subcommand("demo-sine", "sin(pi t) spectra at several alpha against the analytic transform");
    d->add_option("--alpha,-a", demo.alphas, "Dense sampling factors")->delimiter(',')->capture_default_str();
    d->add_option("--n,-n", demo.n, "Samples per signal")->capture_default_str();
    d->add_option("--output,-o", demo.output_dir, "Output directory")->capture_default_str();

    BenchArgs bench;
    std::string bench_csv;
    auto* b = app.add_subcommand("bench", "Count and time transforms across an (N, alpha) grid");
    b->add_option("--grid-n", bench.grid_n, "Signal lengths")->delimiter(',')->capture_default_str();
    b->add_option("--grid-alpha", bench.grid_alpha, "Dense sampling factors")->delimiter(',')->capture_default_str();
    b->add_option("--methods", bench.methods, "alpha_fft, zeropad_fft, naive")->delimiter(',')->capture_default_str();
    b->add_option("--reps", bench.reps, "Timed repetitions per configuration")->capture_default_str();
    b->add_option("--seed", bench.seed, "Input signal seed")->capture_default_str();
    b->add_option("--output,-o", bench.output, "JSON report path")->capture_default_str();
    b->add_option("--csv", bench_csv, "CSV records path (default: report path with .csv)");
    b->add_option("--threads", bench.threads, "Counting-pass workers (default: ALPHA_SPECTRA_THREADS or 1)");

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "Run the oracle, zero-padding, round-trip, aliasing and orthogonality suites");
    v->add_option("--seed", verify.seed, "First seed")->capture_default_str();
    v->add_option("--seeds", verify.seeds, "Seeds per configuration")->capture_default_str();
    v->add_option("--sizes", verify.sizes, "Signal lengths (powers of two)")->delimiter(',')->capture_default_str();
    v->add_flag("--inject-fault", verify.inject_fault, "Perturb the fast path (harness self-test)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        (void)app.exit(e);
        return kParseError;
    }

    try {
        if (c->parsed()) return cmd_compute(compute, std::cout, std::cerr);
        if (d->parsed()) return cmd_demo_sine(demo, std::cout, std::cerr);
        if (b->parsed()) {
            if (!bench_csv.empty()) bench.csv_output = bench_csv;
            return cmd_bench(bench, std::cout, std::cerr);
        }
        if (v->parsed()) return cmd_verify(verify, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kOk;
}

#include "alspec/cli.hpp"

#include "alspec/baseline.hpp"
#include "alspec/bench.hpp"
#include "alspec/demo.hpp"
#include "alspec/fastpath.hpp"
#include "alspec/io.hpp"
#include "alspec/oracle.hpp"
#include "alspec/verify.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>

namespace alspec::cli {

namespace {

std::string alpha_tag(const DenseFactor& alpha) { return std::to_string(alpha.p()) + "_" + std::to_string(alpha.q()); }

std::int64_t parse_count(const std::string& text)
{
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || v < 1) {
        throw InvalidArgument("expected a positive integer, got '" + text + "'");
    }
    return v;
}

std::vector<DenseFactor> parse_alphas(const std::vector<std::string>& texts)
{
    std::vector<DenseFactor> out;
    for (const auto& t : texts) out.push_back(parse_dense_factor(t));
    return out;
}

void write_or_print(const std::filesystem::path& path, std::string_view text, std::ostream& out)
{
    if (path.empty()) out << text;
    else io::write_text(path, text);
}

}  // namespace

int cmd_compute(const ComputeArgs& args, std::ostream& out, std::ostream& err)
{
    DenseFactor alpha;
    try {
        alpha = parse_dense_factor(args.alpha);
    } catch (const InvalidArgument& e) {
        err << "error: --alpha: " << e.what() << '\n';
        return kParseError;
    }
    if (args.method != "auto" && args.method != "fft" && args.method != "naive" && args.method != "zeropad") {
        err << "error: --method must be one of auto, fft, naive, zeropad\n";
        return kParseError;
    }
    if (args.duration && !(*args.duration > 0.0)) {
        err << "error: --duration must be positive\n";
        return kParseError;
    }

    std::optional<Signal> signal;
    try {
        signal = io::read_signal(args.input, args.duration);
    } catch (const io::ParseError& e) {
        err << "error: " << args.input.string() << ": " << e.what() << '\n';
        return kParseError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    }

    const auto n = static_cast<std::int64_t>(signal->size());
    try {
        const auto pair = validate_pair(n, alpha);
        std::string method = args.method;
        if (method == "auto") method = is_power_of_two(pair.n) && is_power_of_two(pair.m) ? "fft" : "naive";

        std::optional<Spectrum> spectrum;
        if (method == "fft") spectrum = fastpath::alpha_fft(*signal, fastpath::plan(n, alpha));
        else if (method == "naive") spectrum = oracle::naive_forward(*signal, alpha);
        else spectrum = baseline::zero_padded_fft(*signal, alpha);

        write_or_print(args.output, io::format_spectrum_csv(*spectrum, method), out);
        if (!args.output.empty()) {
            err << "wrote " << spectrum->size() << " bins (method=" << method << ") to " << args.output.string() << '\n';
        }
        return kOk;
    } catch (const IncompatibleAlpha& e) {
        err << "error: " << e.what() << '\n';
        return kIncompatibleAlpha;
    } catch (const UnsupportedSize& e) {
        err << "error: " << e.what() << " (try --method naive)\n";
        return kUnsupportedSize;
    } catch (const InvalidArgument& e) {
        // zero padding with alpha < 1
        err << "error: " << e.what() << '\n';
        return kIncompatibleAlpha;
    }
}

int cmd_demo_sine(const DemoArgs& args, std::ostream& out, std::ostream& err)
{
    std::vector<DenseFactor> alphas;
    try {
        alphas = parse_alphas(args.alphas);
        if (args.n < 1) throw InvalidArgument("N must be positive");
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    }

    std::vector<demo::DemoCurve> curves;
    try {
        curves = demo::sine_demo(args.n, alphas);
    } catch (const IncompatibleAlpha& e) {
        err << "error: " << e.what() << '\n';
        return kIncompatibleAlpha;
    }

    std::filesystem::create_directories(args.output_dir);
    const double analytic_dc = std::abs(demo::analytic_sine_spectrum(0.0));
    nlohmann::json summary = {{"N", args.n}, {"T", 1.0}, {"signal", "sin(pi n / N)"},
                              {"normalization", "each curve divided by its own value at nu = 0; analytic by 2/pi"},
                              {"band", {0.0, 4.0}}, {"curves", nlohmann::json::array()}};

    double densest = 1.0;
    for (const auto& curve : curves) {
        densest = std::max(densest, curve.alpha.value());
        const auto tag = alpha_tag(curve.alpha);
        io::write_text(args.output_dir / ("spectrum_alpha_" + tag + ".csv"),
                       io::format_spectrum_csv(curve.spectrum, curve.method));

        std::string text = "# N=" + std::to_string(args.n) + "\n# alpha=" + std::to_string(curve.alpha.p()) + "/" +
                           std::to_string(curve.alpha.q()) + "\n# X0=" + io::format_double(curve.spectrum[0].real()) +
                           "\nm,freq,magnitude,analytic_magnitude\n";
        const auto grid = curve.spectrum.grid();
        for (std::int64_t m = 0; m < grid.size(); ++m) {
            const double nu = grid.frequency(m);
            text += std::to_string(m) + "," + io::format_double(nu) + "," +
                    io::format_double(curve.normalized_magnitude[static_cast<std::size_t>(m)]) + "," +
                    io::format_double(std::abs(demo::analytic_sine_spectrum(nu)) / analytic_dc) + "\n";
        }
        io::write_text(args.output_dir / ("sine_alpha_" + tag + ".csv"), text);

        summary["curves"].push_back({{"alpha", curve.alpha.to_string()},
                                     {"bins", curve.spectrum.size()},
                                     {"method", curve.method},
                                     {"X0", curve.spectrum[0].real()},
                                     {"max_deviation", curve.max_deviation}});
        out << "alpha=" << std::setw(5) << curve.alpha.to_string() << "  bins=" << std::setw(6) << curve.spectrum.size()
            << "  max deviation on [0,4] Hz: " << curve.max_deviation << '\n';
    }

    // analytic reference at a quarter of the densest bin spacing across [0, N/T)
    std::string ref = "freq,re,im,magnitude,normalized_magnitude\n";
    const auto steps = static_cast<std::int64_t>(std::ceil(static_cast<double>(args.n) * densest * 4.0));
    for (std::int64_t k = 0; k < steps; ++k) {
        const double nu = static_cast<double>(k) * static_cast<double>(args.n) / static_cast<double>(steps);
        const auto x = demo::analytic_sine_spectrum(nu);
        ref += io::format_double(nu) + "," + io::format_double(x.real()) + "," + io::format_double(x.imag()) + "," +
               io::format_double(std::abs(x)) + "," + io::format_double(std::abs(x) / analytic_dc) + "\n";
    }
    io::write_text(args.output_dir / "analytic.csv", ref);
    io::write_text(args.output_dir / "summary.json", summary.dump(2) + "\n");
    return kOk;
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err)
{
    std::vector<std::int64_t> ns;
    std::vector<DenseFactor> alphas;
    std::vector<bench::Method> methods;
    try {
        for (const auto& t : args.grid_n) ns.push_back(parse_count(t));
        alphas = parse_alphas(args.grid_alpha);
        for (const auto& t : args.methods) methods.push_back(bench::parse_method(t));
        if (ns.empty() || alphas.empty() || methods.empty()) throw InvalidArgument("empty grid");
        if (args.reps < 1) throw InvalidArgument("--reps must be positive");
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    }

    bench::GridOptions options;
    options.repetitions = args.reps;
    options.seed = args.seed;
    options.threads = args.threads > 0 ? args.threads : bench::threads_from_env();

    auto report = bench::make_report(bench::run_grid(ns, alphas, methods, options));

    io::write_text(args.output, bench::to_json(report).dump(2) + "\n");
    auto csv_path = args.csv_output.value_or(std::filesystem::path(args.output).replace_extension(".csv"));
    io::write_text(csv_path, bench::records_csv(report.records));

    for (const auto& r : report.records) {
        if (r.skipped) err << "skipped N=" << r.n << " alpha=" << r.alpha.to_string() << " " << bench::to_string(r.method)
                           << ": " << *r.skipped << '\n';
    }
    for (const auto& v : report.verdicts) {
        out << std::left << std::setw(26) << v.claim << bench::to_string(v.status);
        if (v.status != bench::VerdictStatus::Incomplete) out << "  ratio=" << v.fitted_ratio;
        out << '\n';
        for (const auto& w : v.warnings) out << "  warning: " << w << '\n';
        for (const auto& f : v.failures) out << "  failure: " << f << '\n';
    }
    out << "report: " << args.output.string() << ", records: " << csv_path.string() << '\n';
    return report.any_failed() ? kClaimFailed : kOk;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err)
{
    for (const auto n : args.sizes) {
        if (!is_power_of_two(n)) {
            err << "error: --sizes must be powers of two, got " << n << '\n';
            return kParseError;
        }
    }
    if (args.seeds < 1) {
        err << "error: --seeds must be positive\n";
        return kParseError;
    }

    verify::VerifyOptions options;
    options.seed = args.seed;
    options.seeds = args.seeds;
    options.sizes = args.sizes;
    options.inject_fault = args.inject_fault;

    bool ok = true;
    for (const auto& suite : verify::run_all(options)) {
        out << std::left << std::setw(22) << suite.name << std::right << std::setw(6) << suite.cases
            << " cases  max error " << std::scientific << std::setprecision(3) << suite.max_error << "  tol "
            << suite.tolerance << std::defaultfloat << "  " << (suite.passed() ? "PASS" : "FAIL") << '\n';
        for (const auto& f : suite.failures) {
            out << "  failing: N=" << f.n << " alpha=" << f.alpha.to_string() << " seed=" << f.seed
                << " error=" << f.error << '\n';
        }
        ok = ok && suite.passed();
    }
    return ok ? kOk : kVerificationFailed;
}

}  // namespace alspec::cli

#include "alspec/demo.hpp"

#include "alspec/fastpath.hpp"
#include "alspec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace alspec::demo {

namespace {

double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

}  // namespace

Complex analytic_sine_spectrum(double nu)
{
    // X(nu) = 2 cos(pi nu) exp(-i pi nu) / (pi (1 - 2nu)(1 + 2nu)).
    // cos(pi nu) / (1 -+ 2nu) is rewritten as (pi/2) sinc(pi (1/2 -+ nu)) around the
    // singular factor, which stays finite and accurate through nu = +-1/2.
    const Complex phase = std::polar(1.0, -std::numbers::pi * nu);
    if (nu >= 0.0) return phase * sinc(std::numbers::pi * (0.5 - nu)) / (1.0 + 2.0 * nu);
    return phase * sinc(std::numbers::pi * (0.5 + nu)) / (1.0 - 2.0 * nu);
}

Signal sine_signal(std::int64_t n)
{
    Samples x(static_cast<std::size_t>(n));
    for (std::int64_t k = 0; k < n; ++k) {
        x[static_cast<std::size_t>(k)] = {std::sin(std::numbers::pi * static_cast<double>(k) / static_cast<double>(n)), 0.0};
    }
    return Signal(std::move(x), 1.0);
}

double interpolate_magnitude(const DemoCurve& curve, double nu)
{
    const auto& mag = curve.normalized_magnitude;
    const double spacing = curve.spectrum.grid().spacing();
    const double pos = std::clamp(nu / spacing, 0.0, static_cast<double>(mag.size() - 1));
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    if (lo + 1 >= mag.size()) return mag.back();
    const double frac = pos - static_cast<double>(lo);
    return mag[lo] + frac * (mag[lo + 1] - mag[lo]);
}

std::vector<DemoCurve> sine_demo(std::int64_t n, std::span<const DenseFactor> alphas, const DemoOptions& options)
{
    const auto signal = sine_signal(n);
    const double analytic_dc = std::abs(analytic_sine_spectrum(0.0));

    std::vector<DemoCurve> curves;
    for (const auto& alpha : alphas) {
        const auto pair = validate_pair(n, alpha);
        const bool fast = is_power_of_two(pair.n) && is_power_of_two(pair.m);
        auto spectrum = fast ? fastpath::alpha_fft(signal, alpha) : oracle::naive_forward(signal, alpha);

        DemoCurve curve{alpha, std::move(spectrum), fast ? "fft" : "naive", {}, 0.0};
        const double dc = std::abs(curve.spectrum[0]);
        curve.normalized_magnitude.reserve(curve.spectrum.size());
        for (const auto& bin : curve.spectrum.bins()) curve.normalized_magnitude.push_back(std::abs(bin) / dc);

        auto deviation_at = [&](double nu) {
            return std::abs(interpolate_magnitude(curve, nu) - std::abs(analytic_sine_spectrum(nu)) / analytic_dc);
        };
        const auto grid = curve.spectrum.grid();
        for (std::int64_t m = 0; m < grid.size(); ++m) {
            const double nu = grid.frequency(m);
            if (nu < options.band_lo || nu > options.band_hi) continue;
            curve.max_deviation = std::max(curve.max_deviation, deviation_at(nu));
        }
        const auto probes = std::max<std::size_t>(options.probe_points, 2);
        for (std::size_t k = 0; k < probes; ++k) {
            const double nu =
                options.band_lo + (options.band_hi - options.band_lo) * static_cast<double>(k) / static_cast<double>(probes - 1);
            curve.max_deviation = std::max(curve.max_deviation, deviation_at(nu));
        }
        curves.push_back(std::move(curve));
    }
    return curves;
}

}  // namespace alspec::demo

#pragma once

// sin(pi t) on [0, 1): discrete spectra at several alpha against the
// continuous transform, both normalized by their own value at nu = 0.

#include "alspec/core.hpp"

#include <span>

namespace alspec::demo {

/// Closed form of the integral over [0, 1] of exp(-2 pi i nu t) sin(pi t) dt,
/// with the removable singularities at nu = +-1/2 taken by their limits (-+i/2).
Complex analytic_sine_spectrum(double nu);

/// x_n = sin(pi n / N), n = 0 .. N-1, over T = 1 s.
Signal sine_signal(std::int64_t n);

struct DemoCurve {
    DenseFactor alpha;
    Spectrum spectrum;
    std::string method;  ///< "fft" or "naive"
    /// |X_m| / |X_0|
    std::vector<double> normalized_magnitude;
    /// Max deviation of the piecewise-linear curve through the normalized bins
    /// from |X(nu)| / (2/pi), over the comparison band.
    double max_deviation = 0.0;
};

struct DemoOptions {
    double band_lo = 0.0;
    double band_hi = 4.0;
    /// Evaluation points across the band, in addition to every bin inside it.
    std::size_t probe_points = 4001;
};

/// One curve per alpha; the fast path is used whenever N and alpha N are powers of two.
std::vector<DemoCurve> sine_demo(std::int64_t n, std::span<const DenseFactor> alphas, const DemoOptions& options = {});

/// Interpolated normalized magnitude of a curve at nu (clamped to the bin range).
double interpolate_magnitude(const DemoCurve& curve, double nu);

}  // namespace alspec::demo

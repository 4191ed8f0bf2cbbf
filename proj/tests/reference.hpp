#pragma once

// Test-only reference computations, independent of the library's code paths:
// a long-double textbook evaluation of the alpha-DFT straight from its
// definition, and random inputs.

#include "alspec/core.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace reference {

using alspec::Complex;
using alspec::Samples;

/// X_m = sum_n exp(-2 pi i m n q / (p N)) x_n in long double, exponent built from m*n directly.
inline Samples textbook_alpha_dft(const Samples& x, std::int64_t p, std::int64_t q)
{
    const auto n_len = static_cast<std::int64_t>(x.size());
    const std::int64_t m_len = n_len * p / q;
    const long double pi = 3.141592653589793238462643383279502884L;
    Samples out(static_cast<std::size_t>(m_len));
    for (std::int64_t m = 0; m < m_len; ++m) {
        std::complex<long double> acc{0.0L, 0.0L};
        for (std::int64_t n = 0; n < n_len; ++n) {
            const long double angle = -2.0L * pi * static_cast<long double>(m * n) / static_cast<long double>(m_len);
            const std::complex<long double> w{std::cos(angle), std::sin(angle)};
            acc += w * std::complex<long double>(x[static_cast<std::size_t>(n)]);
        }
        out[static_cast<std::size_t>(m)] = Complex(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
    }
    return out;
}

inline Samples random_disk(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Samples x;
    x.reserve(n);
    while (x.size() < n) {
        const Complex z{u(rng), u(rng)};
        if (std::abs(z) <= 1.0) x.push_back(z);
    }
    return x;
}

inline double max_abs_diff(const Samples& a, const Samples& b)
{
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return a.size() == b.size() ? d : INFINITY;
}

inline double max_rel_diff(const Samples& a, const Samples& b)
{
    double scale = 0.0;
    for (const auto& v : b) scale = std::max(scale, std::abs(v));
    return max_abs_diff(a, b) / (scale > 0.0 ? scale : 1.0);
}

}  // namespace reference

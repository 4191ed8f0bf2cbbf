#include "alspec/oracle.hpp"

#include <numbers>

namespace alspec::oracle {

namespace {

// exp(-2 pi i k / m) for k = 0 .. m-1
Samples roots_of_unity(std::int64_t m)
{
    Samples table(static_cast<std::size_t>(m));
    for (std::int64_t k = 0; k < m; ++k) {
        const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
        table[static_cast<std::size_t>(k)] = std::polar(1.0, angle);
    }
    return table;
}

// (a * b) mod m with the product reduced in 128 bits, result in [0, m)
std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m)
{
    auto r = static_cast<std::int64_t>((static_cast<__int128>(a) * b) % m);
    return r < 0 ? r + m : r;
}

}  // namespace

Spectrum naive_forward(const Signal& signal, const DenseFactor& alpha, OpCounter& counter)
{
    const auto [n_len, m_len] = validate_pair(static_cast<std::int64_t>(signal.size()), alpha);
    const auto roots = roots_of_unity(m_len);
    const auto& x = signal.samples();

    Samples bins(static_cast<std::size_t>(m_len));
    for (std::int64_t m = 0; m < m_len; ++m) {
        Complex acc{0.0, 0.0};
        std::int64_t k = 0;  // (m * n) mod M
        for (std::int64_t n = 0; n < n_len; ++n) {
            acc += roots[static_cast<std::size_t>(k)] * x[static_cast<std::size_t>(n)];
            k += m;
            if (k >= m_len) k -= m_len;
        }
        bins[static_cast<std::size_t>(m)] = acc;
    }
    counter.complex_mults += n_len * m_len;
    counter.complex_adds += n_len * m_len;
    return Spectrum(std::move(bins), n_len, alpha, signal.duration());
}

Spectrum naive_forward(const Signal& signal, const DenseFactor& alpha)
{
    OpCounter unused;
    return naive_forward(signal, alpha, unused);
}

Signal naive_inverse(const Spectrum& spectrum)
{
    const auto m_len = static_cast<std::int64_t>(spectrum.size());
    const auto n_len = spectrum.origin_n();
    const auto roots = roots_of_unity(m_len);
    const auto& bins = spectrum.bins();

    Samples x(static_cast<std::size_t>(n_len));
    for (std::int64_t n = 0; n < n_len; ++n) {
        const auto step = n % m_len;
        Complex acc{0.0, 0.0};
        std::int64_t k = 0;  // (m * n) mod M
        for (std::int64_t m = 0; m < m_len; ++m) {
            // exp(+2 pi i k / M) = conj(exp(-2 pi i k / M))
            acc += std::conj(roots[static_cast<std::size_t>(k)]) * bins[static_cast<std::size_t>(m)];
            k += step;
            if (k >= m_len) k -= m_len;
        }
        x[static_cast<std::size_t>(n)] = acc / static_cast<double>(m_len);
    }
    return Signal(std::move(x), spectrum.duration());
}

Complex orthogonality_kernel(std::int64_t n, std::int64_t l, std::int64_t signal_length, const DenseFactor& alpha)
{
    const auto m_len = validate_pair(signal_length, alpha).m;
    const auto roots = roots_of_unity(m_len);
    Complex acc{0.0, 0.0};
    for (std::int64_t m = 0; m < m_len; ++m) {
        acc += std::conj(roots[static_cast<std::size_t>(mulmod(m, n - l, m_len))]);
    }
    return acc / static_cast<double>(m_len);
}

std::vector<OrthogonalitySample> orthogonality_table(std::int64_t signal_length, const DenseFactor& alpha)
{
    std::vector<OrthogonalitySample> table;
    table.reserve(static_cast<std::size_t>(signal_length * signal_length));
    for (std::int64_t n = 0; n < signal_length; ++n) {
        for (std::int64_t l = 0; l < signal_length; ++l) {
            table.push_back({n, l, orthogonality_kernel(n, l, signal_length, alpha)});
        }
    }
    return table;
}

}  // namespace alspec::oracle

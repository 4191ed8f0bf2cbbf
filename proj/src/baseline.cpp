#include "alspec/baseline.hpp"

#include "alspec/fastpath.hpp"

namespace alspec::baseline {

PaddedSignal zero_pad(const Signal& signal, const DenseFactor& alpha)
{
    if (!alpha.at_least_one()) {
        throw InvalidArgument("zero padding needs alpha >= 1, got " + alpha.to_string());
    }
    const auto pair = validate_pair(static_cast<std::int64_t>(signal.size()), alpha);
    Samples padded(static_cast<std::size_t>(pair.m), Complex{0.0, 0.0});
    std::copy(signal.samples().begin(), signal.samples().end(), padded.begin());
    return {pair.n, std::move(padded), signal.duration()};
}

Spectrum standard_fft(const Samples& sequence, OpCounter& counter, double duration)
{
    const auto length = static_cast<std::int64_t>(sequence.size());
    if (!is_power_of_two(length)) {
        throw UnsupportedSize("standard FFT needs a power-of-two length, got " + std::to_string(length));
    }
    const auto p = fastpath::plan(length, DenseFactor{});
    return fastpath::alpha_fft(Signal(sequence, duration), p, counter);
}

Spectrum standard_fft(const Samples& sequence, double duration)
{
    OpCounter unused;
    return standard_fft(sequence, unused, duration);
}

Spectrum zero_padded_fft(const Signal& signal, const DenseFactor& alpha, OpCounter& counter)
{
    auto padded = zero_pad(signal, alpha);
    // The padded record lasts alpha T, so its bin spacing is 1/(alpha T) as on the alpha grid.
    auto spectrum = standard_fft(padded.samples, counter, signal.duration() * alpha.value());
    return Spectrum(spectrum.bins(), padded.original_n, alpha, signal.duration());
}

Spectrum zero_padded_fft(const Signal& signal, const DenseFactor& alpha)
{
    OpCounter unused;
    return zero_padded_fft(signal, alpha, unused);
}

Samples aliased_reconstruct(const Signal& signal, const DenseFactor& alpha)
{
    if (alpha.at_least_one()) {
        throw InvalidArgument("aliased reconstruction needs alpha < 1, got " + alpha.to_string());
    }
    const auto [n_len, m_len] = validate_pair(static_cast<std::int64_t>(signal.size()), alpha);
    const auto& x = signal.samples();
    Samples folded(static_cast<std::size_t>(m_len), Complex{0.0, 0.0});
    for (std::int64_t n = 0; n < m_len; ++n) {
        for (std::int64_t idx = n; idx < n_len; idx += m_len) folded[static_cast<std::size_t>(n)] += x[static_cast<std::size_t>(idx)];
    }
    return folded;
}

}  // namespace alspec::baseline

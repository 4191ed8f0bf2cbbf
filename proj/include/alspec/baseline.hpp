#pragma once

// Conventional routes the alpha transform is compared against: zero padding
// followed by a classical radix-2 FFT, and the time-domain alias sum that an
// alpha < 1 spectrum inverts to.

#include "alspec/core.hpp"
#include "alspec/op_counter.hpp"

namespace alspec::baseline {

/// Signal extended with (alpha - 1) N trailing zeros.
struct PaddedSignal {
    std::int64_t original_n;
    Samples samples;  ///< length alpha N
    double duration;  ///< duration of the original signal
};

/// Throws InvalidArgument for alpha < 1, IncompatibleAlpha for non-integer alpha N.
PaddedSignal zero_pad(const Signal& signal, const DenseFactor& alpha);

/// Classical radix-2 FFT (the alpha = 1 fast-path kernel). Throws UnsupportedSize
/// unless the length is a power of two.
Spectrum standard_fft(const Samples& sequence, OpCounter& counter, double duration = 1.0);
Spectrum standard_fft(const Samples& sequence, double duration = 1.0);

/// standard_fft(zero_pad(x, alpha)), relabelled onto the alpha grid of the original signal.
Spectrum zero_padded_fft(const Signal& signal, const DenseFactor& alpha, OpCounter& counter);
Spectrum zero_padded_fft(const Signal& signal, const DenseFactor& alpha);

/// x'_n = sum_k x_{n + k alpha N} over 0 <= n + k alpha N < N, reported for n < alpha N.
/// Throws InvalidArgument for alpha >= 1.
Samples aliased_reconstruct(const Signal& signal, const DenseFactor& alpha);

}  // namespace alspec::baseline

#pragma once

// Direct evaluation of the alpha-DFT pair. No factorization, no caching
// beyond one table of the (alpha N)-th roots of unity per call.

#include "alspec/core.hpp"
#include "alspec/op_counter.hpp"

namespace alspec::oracle {

/// X_m = sum_n exp(-2 pi i m n / (alpha N)) x_n, m = 0 .. alpha N - 1.
/// Counts N * alpha N complex multiplies.
Spectrum naive_forward(const Signal& signal, const DenseFactor& alpha);
Spectrum naive_forward(const Signal& signal, const DenseFactor& alpha, OpCounter& counter);

/// x_n = 1/(alpha N) sum_m exp(2 pi i m n / (alpha N)) X_m for n = 0 .. origin_N - 1.
/// For alpha < 1 the result is the alias sum, periodic in n with period alpha N.
Signal naive_inverse(const Spectrum& spectrum);

/// 1/(alpha N) sum_m exp(2 pi i m (n - l) / (alpha N)): 1 on the comb n = l (mod alpha N), 0 elsewhere.
Complex orthogonality_kernel(std::int64_t n, std::int64_t l, std::int64_t signal_length, const DenseFactor& alpha);

struct OrthogonalitySample {
    std::int64_t n;
    std::int64_t l;
    Complex value;
};

/// All kernel values for 0 <= n, l < N.
std::vector<OrthogonalitySample> orthogonality_table(std::int64_t signal_length, const DenseFactor& alpha);

}  // namespace alspec::oracle

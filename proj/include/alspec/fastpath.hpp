#pragma once

// Radix-2 divide-and-conquer evaluation of the alpha-DFT.
//
// The N x alphaN transform matrix is split on even/odd input indices into two
// N/2 x alphaN/2 problems of the same shape, joined by a butterfly. Recursion
// stops after log2(min(N, alphaN)) levels:
//   alpha >= 1: one sample feeds alpha identical outputs (SingleSample),
//   alpha <  1: one output is the plain sum of 1/alpha samples (BlockSum).

#include "alspec/core.hpp"
#include "alspec/op_counter.hpp"

#include <algorithm>
#include <span>

namespace alspec::fastpath {

enum class LeafKind { SingleSample, BlockSum };

const char* to_string(LeafKind kind) noexcept;

/// Immutable recursion descriptor; shareable across threads.
class Plan {
public:
    std::int64_t n() const noexcept { return n_; }
    std::int64_t m() const noexcept { return m_; }
    const DenseFactor& alpha() const noexcept { return alpha_; }
    /// log2(min(N, alpha N))
    int depth() const noexcept { return depth_; }
    LeafKind leaf() const noexcept { return leaf_; }
    /// min(N, alpha N): length of the recursion
    std::int64_t recursion_length() const noexcept { return std::min(n_, m_); }
    /// max(N, alpha N): work per level
    std::int64_t level_width() const noexcept { return std::max(n_, m_); }

    /// W_{M_l}^k for k < M_l/2, where M_l = M / 2^level is the output length at that level.
    std::span<const Complex> twiddles(int level) const { return twiddles_.at(static_cast<std::size_t>(level)); }

    std::int64_t predicted_mults() const noexcept { return predicted_mults_; }

private:
    friend Plan plan(std::int64_t n, const DenseFactor& alpha);
    Plan() = default;

    std::int64_t n_ = 0;
    std::int64_t m_ = 0;
    DenseFactor alpha_;
    int depth_ = 0;
    LeafKind leaf_ = LeafKind::SingleSample;
    std::vector<Samples> twiddles_;
    std::int64_t predicted_mults_ = 0;
};

/// Throws IncompatibleAlpha for non-integer alpha N and UnsupportedSize
/// unless both N and alpha N are powers of two.
Plan plan(std::int64_t n, const DenseFactor& alpha);

/// (M/2) log2(min(N, M)) with M = alpha N: one twiddle multiply per butterfly.
std::int64_t predicted_mults(const Plan& p) noexcept;

Spectrum alpha_fft(const Signal& signal, const Plan& p, OpCounter& counter);
Spectrum alpha_fft(const Signal& signal, const Plan& p);
/// Plans and transforms in one call.
Spectrum alpha_fft(const Signal& signal, const DenseFactor& alpha);

/// X_l = Y_l + W^l Z_l,  X_{l+L} = Y_l - W^l Z_l  for l < L = |Y|.
/// Counts L multiplies and 2L additions.
Samples combine(std::span<const Complex> y, std::span<const Complex> z, std::span<const Complex> twiddles,
                OpCounter& counter);
Samples combine(std::span<const Complex> y, std::span<const Complex> z, std::span<const Complex> twiddles);

/// Sum of the block, accumulated in input order. No multiplies.
Complex leaf_block_sum(std::span<const Complex> block);

}  // namespace alspec::fastpath

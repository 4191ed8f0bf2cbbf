#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace alspec {

using Complex = std::complex<double>;
using Samples = std::vector<Complex>;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when alpha * N is not a positive integer.
class IncompatibleAlpha : public std::domain_error {
public:
    IncompatibleAlpha(std::int64_t n, std::int64_t p, std::int64_t q);

    std::int64_t n() const noexcept { return n_; }
    std::int64_t p() const noexcept { return p_; }
    std::int64_t q() const noexcept { return q_; }

private:
    std::int64_t n_, p_, q_;
};

/// Raised by the radix-2 paths when N or alpha*N is not a power of two.
class UnsupportedSize : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// ---------------------------------------------------------------------------
// DenseFactor
// ---------------------------------------------------------------------------

/// Exact positive rational alpha = p/q, always stored in lowest terms.
class DenseFactor {
public:
    /// alpha = 1
    constexpr DenseFactor() = default;

    std::int64_t p() const noexcept { return p_; }
    std::int64_t q() const noexcept { return q_; }
    double value() const noexcept { return static_cast<double>(p_) / static_cast<double>(q_); }

    bool is_one() const noexcept { return p_ == 1 && q_ == 1; }
    bool at_least_one() const noexcept { return p_ >= q_; }
    /// alpha = 2^k for some integer k (positive or negative).
    bool is_power_of_two() const noexcept;

    DenseFactor reciprocal() const;

    /// "p/q", or "p" when q == 1.
    std::string to_string() const;

    friend bool operator==(const DenseFactor&, const DenseFactor&) = default;
    friend bool operator<(const DenseFactor& a, const DenseFactor& b) noexcept
    {
        return static_cast<__int128>(a.p_) * b.q_ < static_cast<__int128>(b.p_) * a.q_;
    }

private:
    friend DenseFactor make_dense_factor(std::int64_t p, std::int64_t q);
    constexpr DenseFactor(std::int64_t p, std::int64_t q) : p_(p), q_(q) {}

    std::int64_t p_ = 1;
    std::int64_t q_ = 1;
};

/// Throws InvalidArgument unless p >= 1 and q >= 1.
DenseFactor make_dense_factor(std::int64_t p, std::int64_t q);

/// Parses "p/q" or a bare integer "p". Throws InvalidArgument on malformed text.
DenseFactor parse_dense_factor(std::string_view text);

// ---------------------------------------------------------------------------
// Signal / Spectrum
// ---------------------------------------------------------------------------

/// Finite complex time-domain sequence sampled uniformly over [0, T).
class Signal {
public:
    explicit Signal(Samples samples, double duration = 1.0);

    const Samples& samples() const noexcept { return samples_; }
    std::size_t size() const noexcept { return samples_.size(); }
    double duration() const noexcept { return duration_; }
    const Complex& operator[](std::size_t i) const { return samples_[i]; }
    double sample_interval() const noexcept { return duration_ / static_cast<double>(samples_.size()); }

private:
    Samples samples_;
    double duration_;
};

struct ValidatedPair {
    std::int64_t n;  ///< signal length
    std::int64_t m;  ///< spectrum length alpha*N
};

/// Succeeds iff alpha*N is a positive integer, i.e. q divides N.
ValidatedPair validate_pair(std::int64_t n, const DenseFactor& alpha);

/// Frequency of bin m: m / (alpha T). Throws std::out_of_range unless 0 <= m < bins.
double bin_frequency(std::int64_t m, std::int64_t bins, const DenseFactor& alpha, double duration);

/// Bin-to-frequency mapping of an alpha*N spectrum.
class FrequencyGrid {
public:
    FrequencyGrid(const DenseFactor& alpha, double duration, std::int64_t bins);

    std::int64_t size() const noexcept { return bins_; }
    double spacing() const noexcept { return 1.0 / (alpha_.value() * duration_); }
    double frequency(std::int64_t m) const { return bin_frequency(m, bins_, alpha_, duration_); }

private:
    DenseFactor alpha_;
    double duration_;
    std::int64_t bins_;
};

/// alpha*N complex bins of a transformed Signal.
class Spectrum {
public:
    Spectrum(Samples bins, std::int64_t origin_n, const DenseFactor& alpha, double duration = 1.0);

    const Samples& bins() const noexcept { return bins_; }
    std::size_t size() const noexcept { return bins_.size(); }
    std::int64_t origin_n() const noexcept { return origin_n_; }
    const DenseFactor& alpha() const noexcept { return alpha_; }
    double duration() const noexcept { return duration_; }
    FrequencyGrid grid() const { return {alpha_, duration_, static_cast<std::int64_t>(bins_.size())}; }

    const Complex& operator[](std::size_t m) const { return bins_[m]; }

private:
    Samples bins_;
    std::int64_t origin_n_;
    DenseFactor alpha_;
    double duration_;
};

// ---------------------------------------------------------------------------
// Small integer helpers shared by the radix-2 paths
// ---------------------------------------------------------------------------

constexpr bool is_power_of_two(std::int64_t v) noexcept { return v > 0 && (v & (v - 1)) == 0; }

constexpr int log2_exact(std::int64_t v) noexcept
{
    int k = 0;
    while (v > 1) {
        v >>= 1;
        ++k;
    }
    return k;
}

}  // namespace alspec

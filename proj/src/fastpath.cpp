#include "alspec/fastpath.hpp"

#include <algorithm>
#include <cassert>
#include <numbers>

namespace alspec::fastpath {

namespace {

// Output-in-place butterfly over out[0, 2*half): first half holds Y, second half Z.
void butterfly(Complex* out, std::size_t half, const Complex* w)
{
    for (std::size_t l = 0; l < half; ++l) {
        const Complex y = out[l];
        const Complex wz = w[l] * out[l + half];
        out[l] = y + wz;
        out[l + half] = y - wz;
    }
}

class Recursion {
public:
    Recursion(const Plan& p, OpCounter& counter) : plan_(p), counter_(counter) {}

    // x is a strided view of n samples; writes m = alpha*n outputs to out.
    void run(const Complex* x, std::size_t stride, std::size_t n, Complex* out, std::size_t m, int level)
    {
        if (level == plan_.depth()) {
            counter_.deepest_level = std::max(counter_.deepest_level, level);
            leaf(x, stride, n, out, m);
            return;
        }
        const std::size_t half = m / 2;
        run(x, 2 * stride, n / 2, out, half, level + 1);
        run(x + stride, 2 * stride, n / 2, out + half, half, level + 1);
        butterfly(out, half, plan_.twiddles(level).data());
        counter_.complex_mults += static_cast<std::int64_t>(half);
        counter_.complex_adds += static_cast<std::int64_t>(m);
    }

private:
    void leaf(const Complex* x, std::size_t stride, std::size_t n, Complex* out, std::size_t m)
    {
        if (n == 1) {
            // alpha x 1 matrix of ones
            std::fill(out, out + m, x[0]);
            return;
        }
        // 1 x (1/alpha) matrix of ones
        assert(m == 1);
        Complex acc = x[0];
        for (std::size_t k = 1; k < n; ++k) acc += x[k * stride];
        out[0] = acc;
        counter_.complex_adds += static_cast<std::int64_t>(n - 1);
    }

    const Plan& plan_;
    OpCounter& counter_;
};

}  // namespace

const char* to_string(LeafKind kind) noexcept
{
    return kind == LeafKind::SingleSample ? "SingleSample" : "BlockSum";
}

Plan plan(std::int64_t n, const DenseFactor& alpha)
{
    const auto pair = validate_pair(n, alpha);
    if (!is_power_of_two(pair.n) || !is_power_of_two(pair.m)) {
        throw UnsupportedSize("fast path needs power-of-two N and alpha*N, got N = " + std::to_string(pair.n) +
                              ", alpha*N = " + std::to_string(pair.m) + "; use the naive method");
    }

    Plan p;
    p.n_ = pair.n;
    p.m_ = pair.m;
    p.alpha_ = alpha;
    p.depth_ = log2_exact(std::min(pair.n, pair.m));
    p.leaf_ = alpha.at_least_one() ? LeafKind::SingleSample : LeafKind::BlockSum;

    p.twiddles_.reserve(static_cast<std::size_t>(p.depth_));
    for (int level = 0; level < p.depth_; ++level) {
        const std::int64_t width = pair.m >> level;
        Samples table(static_cast<std::size_t>(width / 2));
        for (std::int64_t k = 0; k < width / 2; ++k) {
            const double angle = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(width);
            table[static_cast<std::size_t>(k)] = std::polar(1.0, angle);
        }
        p.twiddles_.push_back(std::move(table));
    }
    p.predicted_mults_ = (pair.m / 2) * p.depth_;
    return p;
}

std::int64_t predicted_mults(const Plan& p) noexcept { return p.predicted_mults(); }

Spectrum alpha_fft(const Signal& signal, const Plan& p, OpCounter& counter)
{
    if (static_cast<std::int64_t>(signal.size()) != p.n()) {
        throw InvalidArgument("signal has " + std::to_string(signal.size()) + " samples but the plan expects " +
                              std::to_string(p.n()));
    }
    Samples bins(static_cast<std::size_t>(p.m()));
    Recursion(p, counter)
        .run(signal.samples().data(), 1, static_cast<std::size_t>(p.n()), bins.data(),
             static_cast<std::size_t>(p.m()), 0);
    return Spectrum(std::move(bins), p.n(), p.alpha(), signal.duration());
}

Spectrum alpha_fft(const Signal& signal, const Plan& p)
{
    OpCounter unused;
    return alpha_fft(signal, p, unused);
}

Spectrum alpha_fft(const Signal& signal, const DenseFactor& alpha)
{
    return alpha_fft(signal, plan(static_cast<std::int64_t>(signal.size()), alpha));
}

Samples combine(std::span<const Complex> y, std::span<const Complex> z, std::span<const Complex> twiddles,
                OpCounter& counter)
{
    if (y.size() != z.size() || twiddles.size() != y.size()) {
        throw std::logic_error("butterfly operands disagree in length");
    }
    const auto half = y.size();
    Samples out(2 * half);
    std::copy(y.begin(), y.end(), out.begin());
    std::copy(z.begin(), z.end(), out.begin() + static_cast<std::ptrdiff_t>(half));
    butterfly(out.data(), half, twiddles.data());
    counter.complex_mults += static_cast<std::int64_t>(half);
    counter.complex_adds += static_cast<std::int64_t>(2 * half);
    return out;
}

Samples combine(std::span<const Complex> y, std::span<const Complex> z, std::span<const Complex> twiddles)
{
    OpCounter unused;
    return combine(y, z, twiddles, unused);
}

Complex leaf_block_sum(std::span<const Complex> block)
{
    Complex acc{0.0, 0.0};
    for (const auto& v : block) acc += v;
    return acc;
}

}  // namespace alspec::fastpath

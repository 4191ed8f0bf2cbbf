#include "alspec/core.hpp"

#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

namespace alspec {

namespace {

std::string incompatible_message(std::int64_t n, std::int64_t p, std::int64_t q)
{
    std::ostringstream os;
    os << "alpha = " << p << "/" << q << " is incompatible with N = " << n << ": alpha*N = " << n * p << "/" << q
       << " is not an integer (N must be a multiple of " << q << ")";
    return os.str();
}

}  // namespace

IncompatibleAlpha::IncompatibleAlpha(std::int64_t n, std::int64_t p, std::int64_t q)
    : std::domain_error(incompatible_message(n, p, q)), n_(n), p_(p), q_(q)
{
}

bool DenseFactor::is_power_of_two() const noexcept
{
    return alspec::is_power_of_two(p_) && alspec::is_power_of_two(q_);
}

DenseFactor DenseFactor::reciprocal() const { return DenseFactor(q_, p_); }

std::string DenseFactor::to_string() const
{
    if (q_ == 1) return std::to_string(p_);
    return std::to_string(p_) + "/" + std::to_string(q_);
}

DenseFactor make_dense_factor(std::int64_t p, std::int64_t q)
{
    if (p < 1 || q < 1) {
        throw InvalidArgument("dense factor needs positive numerator and denominator, got " + std::to_string(p) +
                              "/" + std::to_string(q));
    }
    const auto g = std::gcd(p, q);
    return DenseFactor(p / g, q / g);
}

DenseFactor parse_dense_factor(std::string_view text)
{
    auto parse_int = [&](std::string_view part) {
        std::int64_t v = 0;
        const auto* first = part.data();
        const auto* last = part.data() + part.size();
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (part.empty() || ec != std::errc{} || ptr != last) {
            throw InvalidArgument("malformed alpha literal '" + std::string(text) + "' (expected p/q)");
        }
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return make_dense_factor(parse_int(text), 1);
    return make_dense_factor(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Signal::Signal(Samples samples, double duration) : samples_(std::move(samples)), duration_(duration)
{
    if (samples_.empty()) throw InvalidArgument("signal must contain at least one sample");
    if (!(duration_ > 0.0) || !std::isfinite(duration_)) {
        throw InvalidArgument("signal duration must be positive and finite");
    }
}

ValidatedPair validate_pair(std::int64_t n, const DenseFactor& alpha)
{
    if (n < 1) throw InvalidArgument("signal length must be positive, got " + std::to_string(n));
    if (n % alpha.q() != 0) throw IncompatibleAlpha(n, alpha.p(), alpha.q());
    return {n, n / alpha.q() * alpha.p()};
}

double bin_frequency(std::int64_t m, std::int64_t bins, const DenseFactor& alpha, double duration)
{
    if (m < 0 || m >= bins) {
        throw std::out_of_range("bin index " + std::to_string(m) + " outside [0, " + std::to_string(bins) + ")");
    }
    // m / (alpha T) = m q / (p T), keeping the integer part exact
    return static_cast<double>(m * alpha.q()) / (static_cast<double>(alpha.p()) * duration);
}

FrequencyGrid::FrequencyGrid(const DenseFactor& alpha, double duration, std::int64_t bins)
    : alpha_(alpha), duration_(duration), bins_(bins)
{
    if (bins_ < 1) throw InvalidArgument("frequency grid needs at least one bin");
    if (!(duration_ > 0.0)) throw InvalidArgument("frequency grid duration must be positive");
}

Spectrum::Spectrum(Samples bins, std::int64_t origin_n, const DenseFactor& alpha, double duration)
    : bins_(std::move(bins)), origin_n_(origin_n), alpha_(alpha), duration_(duration)
{
    const auto pair = validate_pair(origin_n_, alpha_);
    if (static_cast<std::int64_t>(bins_.size()) != pair.m) {
        throw InvalidArgument("spectrum has " + std::to_string(bins_.size()) + " bins, expected alpha*N = " +
                              std::to_string(pair.m));
    }
    if (!(duration_ > 0.0)) throw InvalidArgument("spectrum duration must be positive");
}

}  // namespace alspec

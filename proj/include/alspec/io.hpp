#pragma once

// Signal and spectrum file formats.
//
// Signal CSV:   optional "# T=<seconds>" / "# N=<count>" comment lines, then a
//               header "index,re,im" or "time,value", one row per sample.
// Signal JSON:  {"T": <seconds>, "re": [...], "im": [...]}  ("T", "im" optional).
// Spectrum CSV: "# N=", "# alpha=p/q", "# T=", "# method=" lines, then
//               "m,freq,re,im,magnitude" with 17 significant digits.

#include "alspec/core.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace alspec::io {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line);
    /// 1-based; 0 when the position is unknown.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

enum class SignalFormat { Csv, Json };

/// Duration precedence: override, then "T=" metadata, then the time column span, then 1 s.
Signal parse_signal_csv(std::string_view text, std::optional<double> duration_override = std::nullopt);
Signal parse_signal_json(std::string_view text, std::optional<double> duration_override = std::nullopt);

/// Picks the format from the extension (".json") or the first non-blank character.
Signal read_signal(const std::filesystem::path& path, std::optional<double> duration_override = std::nullopt);

/// Parsed content of a spectrum CSV.
struct SpectrumFile {
    std::int64_t n = 0;
    DenseFactor alpha;
    double duration = 1.0;
    std::string method;
    Samples bins;
    std::vector<double> freq;
    std::vector<double> magnitude;

    Spectrum to_spectrum() const { return Spectrum(bins, n, alpha, duration); }
};

std::string format_spectrum_csv(const Spectrum& spectrum, std::string_view method);
SpectrumFile parse_spectrum_csv(std::string_view text);

/// Fixed 17-significant-digit rendering; parses back to the same double.
std::string format_double(double v);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace alspec::io

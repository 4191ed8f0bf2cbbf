#include "alspec/io.hpp"

#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace alspec::io {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        out.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

double parse_double(std::string_view field, std::size_t line)
{
    double v = 0.0;
    const auto* first = field.data();
    const auto* last = field.data() + field.size();
    if (!field.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (field.empty() || ec != std::errc{} || ptr != last) {
        throw ParseError("expected a number, got '" + std::string(field) + "'", line);
    }
    return v;
}

std::int64_t parse_int(std::string_view field, std::size_t line)
{
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
        throw ParseError("expected an integer, got '" + std::string(field) + "'", line);
    }
    return v;
}

// Splits text into lines, keeping 1-based numbering.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn)
{
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto pos = text.find('\n', start);
        const auto line = text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
        ++number;
        if (pos == std::string_view::npos) {
            if (!trim(line).empty()) fn(line, number);
            break;
        }
        fn(line, number);
        start = pos + 1;
    }
}

// "# key=value" -> (key, value); anything else in a comment is ignored.
std::optional<std::pair<std::string_view, std::string_view>> metadata(std::string_view comment)
{
    auto body = trim(comment.substr(1));
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) return std::nullopt;
    return std::pair{trim(body.substr(0, eq)), trim(body.substr(eq + 1))};
}

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line)
{
}

Signal parse_signal_csv(std::string_view text, std::optional<double> duration_override)
{
    enum class Layout { Unknown, IndexReIm, TimeValue };
    Layout layout = Layout::Unknown;
    std::optional<double> declared_t;
    std::optional<std::int64_t> declared_n;
    std::size_t last_line = 0;
    Samples samples;
    std::vector<double> times;

    for_each_line(text, [&](std::string_view raw, std::size_t line) {
        last_line = line;
        const auto content = trim(raw);
        if (content.empty()) return;
        if (content.front() == '#') {
            if (const auto kv = metadata(content)) {
                if (kv->first == "T") {
                    declared_t = parse_double(kv->second, line);
                    if (!(*declared_t > 0.0)) throw ParseError("T must be positive", line);
                } else if (kv->first == "N") {
                    declared_n = parse_int(kv->second, line);
                }
            }
            return;
        }
        const auto fields = split(content, ',');
        if (layout == Layout::Unknown) {
            if (fields.size() == 3 && fields[0] == "index" && fields[1] == "re" && fields[2] == "im") {
                layout = Layout::IndexReIm;
            } else if (fields.size() == 2 && fields[0] == "time" && fields[1] == "value") {
                layout = Layout::TimeValue;
            } else {
                throw ParseError("expected header 'index,re,im' or 'time,value'", line);
            }
            return;
        }
        if (layout == Layout::IndexReIm) {
            if (fields.size() != 3) throw ParseError("expected 3 columns (index,re,im)", line);
            const auto index = parse_int(fields[0], line);
            if (index != static_cast<std::int64_t>(samples.size())) {
                throw ParseError("index " + std::to_string(index) + " out of sequence (expected " +
                                     std::to_string(samples.size()) + ")",
                                 line);
            }
            samples.emplace_back(parse_double(fields[1], line), parse_double(fields[2], line));
        } else {
            if (fields.size() != 2) throw ParseError("expected 2 columns (time,value)", line);
            times.push_back(parse_double(fields[0], line));
            samples.emplace_back(parse_double(fields[1], line), 0.0);
            if (times.size() >= 3) {
                const double first_step = times[1] - times[0];
                const double step = times.back() - times[times.size() - 2];
                if (std::abs(step - first_step) > 1e-9 * std::abs(first_step)) {
                    throw ParseError("time column is not uniformly spaced", line);
                }
            }
            if (times.size() == 2 && !(times[1] > times[0])) {
                throw ParseError("time column must be increasing", line);
            }
        }
    });

    if (layout == Layout::Unknown) throw ParseError("missing header line", last_line);
    if (samples.empty()) throw ParseError("no samples", last_line);
    if (declared_n && *declared_n != static_cast<std::int64_t>(samples.size())) {
        throw ParseError("declared N=" + std::to_string(*declared_n) + " but found " +
                             std::to_string(samples.size()) + " rows",
                         last_line);
    }

    double duration = 1.0;
    if (duration_override) duration = *duration_override;
    else if (declared_t) duration = *declared_t;
    else if (times.size() >= 2) {
        const double step = (times.back() - times.front()) / static_cast<double>(times.size() - 1);
        duration = step * static_cast<double>(times.size());
    }
    return Signal(std::move(samples), duration);
}

Signal parse_signal_json(std::string_view text, std::optional<double> duration_override)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // nlohmann reports a byte offset; turn it into a line number
        const auto upto = text.substr(0, std::min<std::size_t>(e.byte, text.size()));
        const auto line = static_cast<std::size_t>(std::count(upto.begin(), upto.end(), '\n')) + 1;
        throw ParseError(e.what(), line);
    }
    try {
        if (!doc.is_object() || !doc.contains("re")) throw ParseError("JSON signal needs an object with 're'", 0);
        const auto re = doc.at("re").get<std::vector<double>>();
        std::vector<double> im(re.size(), 0.0);
        if (doc.contains("im")) im = doc.at("im").get<std::vector<double>>();
        if (im.size() != re.size()) throw ParseError("'re' and 'im' differ in length", 0);
        if (re.empty()) throw ParseError("no samples", 0);
        Samples samples(re.size());
        for (std::size_t i = 0; i < re.size(); ++i) samples[i] = {re[i], im[i]};
        double duration = doc.value("T", 1.0);
        if (duration_override) duration = *duration_override;
        if (!(duration > 0.0)) throw ParseError("T must be positive", 0);
        return Signal(std::move(samples), duration);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what(), 0);
    }
}

Signal read_signal(const std::filesystem::path& path, std::optional<double> duration_override)
{
    const auto text = read_text(path);
    const auto first = text.find_first_not_of(" \t\r\n");
    const bool json = path.extension() == ".json" || (first != std::string::npos && text[first] == '{');
    return json ? parse_signal_json(text, duration_override) : parse_signal_csv(text, duration_override);
}

std::string format_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_spectrum_csv(const Spectrum& spectrum, std::string_view method)
{
    const auto grid = spectrum.grid();
    std::string out;
    out.reserve(spectrum.size() * 96 + 128);
    out += "# N=" + std::to_string(spectrum.origin_n()) + "\n";
    out += "# alpha=" + std::to_string(spectrum.alpha().p()) + "/" + std::to_string(spectrum.alpha().q()) + "\n";
    out += "# T=" + format_double(spectrum.duration()) + "\n";
    out += "# method=" + std::string(method) + "\n";
    out += "m,freq,re,im,magnitude\n";
    for (std::size_t m = 0; m < spectrum.size(); ++m) {
        const auto& bin = spectrum[m];
        out += std::to_string(m);
        out += ',';
        out += format_double(grid.frequency(static_cast<std::int64_t>(m)));
        out += ',';
        out += format_double(bin.real());
        out += ',';
        out += format_double(bin.imag());
        out += ',';
        out += format_double(std::abs(bin));
        out += '\n';
    }
    return out;
}

SpectrumFile parse_spectrum_csv(std::string_view text)
{
    SpectrumFile file;
    bool have_n = false;
    bool have_alpha = false;
    bool have_header = false;
    std::size_t last_line = 0;

    for_each_line(text, [&](std::string_view raw, std::size_t line) {
        last_line = line;
        const auto content = trim(raw);
        if (content.empty()) return;
        if (content.front() == '#') {
            if (const auto kv = metadata(content)) {
                if (kv->first == "N") {
                    file.n = parse_int(kv->second, line);
                    have_n = true;
                } else if (kv->first == "alpha") {
                    try {
                        file.alpha = parse_dense_factor(kv->second);
                    } catch (const InvalidArgument& e) {
                        throw ParseError(e.what(), line);
                    }
                    have_alpha = true;
                } else if (kv->first == "T") {
                    file.duration = parse_double(kv->second, line);
                } else if (kv->first == "method") {
                    file.method = std::string(kv->second);
                }
            }
            return;
        }
        const auto fields = split(content, ',');
        if (!have_header) {
            if (content != "m,freq,re,im,magnitude") throw ParseError("expected header 'm,freq,re,im,magnitude'", line);
            have_header = true;
            return;
        }
        if (fields.size() != 5) throw ParseError("expected 5 columns", line);
        if (parse_int(fields[0], line) != static_cast<std::int64_t>(file.bins.size())) {
            throw ParseError("bin index out of sequence", line);
        }
        file.freq.push_back(parse_double(fields[1], line));
        file.bins.emplace_back(parse_double(fields[2], line), parse_double(fields[3], line));
        file.magnitude.push_back(parse_double(fields[4], line));
    });

    if (!have_header) throw ParseError("missing header line", last_line);
    if (!have_n || !have_alpha) throw ParseError("missing N= or alpha= metadata", last_line);
    try {
        (void)file.to_spectrum();
    } catch (const std::exception& e) {
        throw ParseError(e.what(), last_line);
    }
    return file;
}

std::string read_text(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

}  // namespace alspec::io

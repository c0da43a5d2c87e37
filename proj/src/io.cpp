#include "tnear/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "tnear/errors.hpp"

namespace tnear {

std::string format_double(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, value);
    return buf;
}

namespace {

void write_row(std::ostream& os, std::span<const double> values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) os << ' ';
        os << format_double(values[i]);
    }
    os << '\n';
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

template <typename T>
T parse_number(std::string_view field, std::size_t line, std::size_t index) {
    T value{};
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParseError(line, index, "cannot parse '" + std::string(field) + "' as a number");
    return value;
}

std::vector<double> parse_row(const std::vector<std::string_view>& lines, std::size_t line, std::size_t expected) {
    const std::string_view text = line <= lines.size() ? lines[line - 1] : std::string_view{};
    const auto fields = split_fields(text);
    if (fields.size() != expected)
        throw ParseError(line, std::min(fields.size(), expected) + 1,
                         "expected " + std::to_string(expected) + " values, found " + std::to_string(fields.size()));
    std::vector<double> values;
    values.reserve(expected);
    for (std::size_t i = 0; i < fields.size(); ++i) values.push_back(parse_number<double>(fields[i], line, i + 1));
    return values;
}

}  // namespace

std::string format_matrix(const BandedToeplitz& t) {
    std::ostringstream os;
    write_matrix(os, t);
    return os.str();
}

void write_matrix(std::ostream& os, const BandedToeplitz& t) {
    os << t.order() << ' ' << t.half_bandwidth() << '\n';
    write_row(os, t.sigma());
    os << format_double(t.delta()) << '\n';
    write_row(os, t.tau());
}

BandedToeplitz parse_matrix(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw ParseError(1, 1, "empty matrix file");
    const auto header = split_fields(lines[0]);
    if (header.size() != 2) throw ParseError(1, std::min<std::size_t>(header.size(), 2) + 1, "header must be 'n k'");
    const auto n = parse_number<std::size_t>(header[0], 1, 1);
    const auto k = parse_number<std::size_t>(header[1], 1, 2);
    if (n == 0) throw ParseError(1, 1, "order n must be positive");
    if (k > n / 2) throw ParseError(1, 2, "half-bandwidth k must not exceed floor(n/2)");

    if (k > 0 && lines.size() < 4) throw ParseError(lines.size() + 1, 1, "truncated matrix file");
    auto sigma = parse_row(lines, 2, k);
    const auto delta = parse_row(lines, 3, 1);
    auto tau = parse_row(lines, 4, k);
    for (std::size_t extra = 5; extra <= lines.size(); ++extra)
        if (!split_fields(lines[extra - 1]).empty()) throw ParseError(extra, 1, "unexpected trailing content");
    return {n, k, std::move(sigma), delta[0], std::move(tau)};
}

BandedToeplitz load_matrix(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open matrix file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix(buf.str());
}

}  // namespace tnear

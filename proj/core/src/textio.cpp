#include "gridwalk/textio.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gridwalk/errors.hpp"

namespace gridwalk {

std::string fixed6(double value) {
    // Locale-proof fixed-point: render from an integer scaled by 1e6.
    double scaled = std::round(value * 1e6);
    if (scaled == 0.0) scaled = 0.0;  // avoid "-0.000000"
    const bool negative = scaled < 0.0;
    unsigned long long units = static_cast<unsigned long long>(std::abs(scaled));
    const unsigned long long whole = units / 1000000ull;
    const unsigned long long frac = units % 1000000ull;
    char buf[48];
    std::snprintf(buf, sizeof buf, "%s%llu.%06llu", negative ? "-" : "", whole, frac);
    return buf;
}

namespace {

// Strips comment lines and bracket delimiters, leaving integers separated
// by commas/whitespace.
std::string strip_markup(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        // UTF-8 mathematical angle brackets U+27E8/U+27E9.
        if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
            static_cast<unsigned char>(text[i + 1]) == 0x9F &&
            (static_cast<unsigned char>(text[i + 2]) == 0xA8 ||
             static_cast<unsigned char>(text[i + 2]) == 0xA9)) {
            i += 3;
            continue;
        }
        if (text[i] == '<' || text[i] == '>') {
            ++i;
            continue;
        }
        out.push_back(text[i] == ',' ? ' ' : text[i]);
        ++i;
    }
    return out;
}

}  // namespace

std::vector<int> parse_index_sequence(std::string_view text) {
    std::istringstream in(strip_markup(text));
    std::vector<int> out;
    std::string token;
    while (in >> token) {
        try {
            std::size_t used = 0;
            const int value = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            out.push_back(value);
        } catch (const std::exception&) {
            throw ParseError("not an index: '" + token + "'");
        }
    }
    return out;
}

std::string write_index_sequence(std::span<const int> steps) {
    std::string out;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(steps[i]);
    }
    out += '\n';
    return out;
}

std::string emit_bfile(std::span<const int> seq, long long offset) {
    std::string out;
    long long n = offset;
    for (const int value : seq) {
        out += std::to_string(n++);
        out += ' ';
        out += std::to_string(value);
        out += '\n';
    }
    return out;
}

std::vector<long long> parse_bfile(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<long long> values;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        long long n = 0;
        long long value = 0;
        if (!(ls >> n >> value)) throw ParseError("malformed b-file line: '" + line + "'");
        values.push_back(value);
    }
    return values;
}

std::string write_points(const GridSpec& grid, const std::vector<Vertex>& vertices) {
    std::string out;
    for (const Vertex& v : vertices) {
        const std::vector<double> p = embed_vertex(grid, v);
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) out += ", ";
            out += fixed6(p[i]);
        }
        out += '\n';
    }
    return out;
}

std::vector<std::vector<double>> parse_points(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::vector<double>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        for (char& c : line) {
            if (c == ',') c = ' ';
        }
        std::istringstream ls(line);
        std::vector<double> point;
        double value = 0.0;
        while (ls >> value) point.push_back(value);
        if (point.empty()) throw ParseError("malformed point line: '" + line + "'");
        out.push_back(std::move(point));
    }
    return out;
}

std::string write_code_lines(const BinaryCode& code) {
    std::string out;
    for (const auto& v : code.vertices) {
        for (const auto bit : v) out += static_cast<char>('0' + bit);
        out += '\n';
    }
    return out;
}

BinaryCode parse_code_lines(std::string_view text) {
    std::istringstream in{std::string(text)};
    BinaryCode code;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::uint8_t> bits;
        bits.reserve(line.size());
        for (const char c : line) {
            if (c != '0' && c != '1') throw ParseError("not a bit string: '" + line + "'");
            bits.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        if (!code.vertices.empty() && bits.size() != code.vertices.front().size()) {
            throw ParseError("inconsistent code dimensions");
        }
        code.vertices.push_back(std::move(bits));
    }
    code.dimension = code.vertices.empty() ? 0 : static_cast<int>(code.vertices.front().size());
    return code;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << content;
}

}  // namespace gridwalk

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gridwalk/gray.hpp"
#include "gridwalk/grid.hpp"

namespace gridwalk {

/// Locale-independent fixed-point rendering with six decimals ("1.500000").
std::string fixed6(double value);

/// Index-sequence text: signed integers separated by commas and/or
/// whitespace, optional angle-bracket delimiters, '#' comment lines.
std::vector<int> parse_index_sequence(std::string_view text);

/// Writer convention: comma+space separated, no brackets.
std::string write_index_sequence(std::span<const int> steps);

/// OEIS b-file lines "n a(n)", n starting at offset.
std::string emit_bfile(std::span<const int> seq, long long offset = 1);
std::vector<long long> parse_bfile(std::string_view text);

/// One embedded vertex per line, six decimals, comma+space separated.
std::string write_points(const GridSpec& grid, const std::vector<Vertex>& vertices);
std::vector<std::vector<double>> parse_points(std::string_view text);

/// Codes as lines of bit strings ("000", "100", ...).
std::string write_code_lines(const BinaryCode& code);
BinaryCode parse_code_lines(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace gridwalk

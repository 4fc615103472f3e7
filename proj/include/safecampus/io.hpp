#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace safecampus::io {

// Shortest decimal representation that round-trips the exact double.
std::string format_double(double value);

std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

// Parsers that reject trailing junk and report the offending text.
double parse_double(std::string_view text, std::string_view what);
long parse_long(std::string_view text, std::string_view what);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

// Single-column CSV with header `community_risk`, one probability per row.
std::vector<double> read_risk_trajectory_csv(const std::filesystem::path& path);

}  // namespace safecampus::io

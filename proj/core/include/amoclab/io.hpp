#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace amoclab {

/// Serializes a double with 17 significant digits (round-trips IEEE-754
/// exactly, locale-independent).
std::string format_g17(double v);

/// Locale-free strict double parse; throws std::invalid_argument on garbage.
double parse_double(const std::string& s);

/// Empty fields parse to NaN so optional trajectory columns survive a
/// round-trip.
double parse_double_or_nan(const std::string& s);

std::vector<std::string> split_csv_line(const std::string& line);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

/// Hex SHA-256 digest of a byte string (manifest content hashes).
std::string sha256_hex(const std::string& bytes);

}  // namespace amoclab

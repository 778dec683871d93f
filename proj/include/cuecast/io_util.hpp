#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cuecast {

// Shortest decimal form that round-trips the exact double ("0.04", "1e-09").
std::string format_double(double value);

// Strict locale-independent numeric parsing; the whole field must be
// consumed. Returns nullopt on any malformed input.
std::optional<double> parse_double_strict(std::string_view field);
std::optional<std::int64_t> parse_int_strict(std::string_view field);

// Comma-split with no quoting; a trailing '\r' on the line is dropped.
std::vector<std::string> split_csv_line(std::string_view line);

std::string read_file(const std::filesystem::path& path);

// Writes via a sibling temp file and rename so readers never observe a
// partial file.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

}  // namespace cuecast

#pragma once

// Small text helpers shared by the file-format readers.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace mprisk::text {

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

std::string_view trim(std::string_view s);
std::vector<std::string> split(std::string_view line, char sep);
std::vector<std::string> split_lines(std::string_view text);

// Strict parse of the whole field; throws ValidationError mentioning `what`.
double parse_double(std::string_view field, const std::string& what);
long long parse_int(std::string_view field, const std::string& what);

// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

}  // namespace mprisk::text

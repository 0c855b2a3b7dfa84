#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace clfe {

// Whole-file helpers. All failures are IoError.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

// Lines without their terminators; a trailing newline does not produce an
// extra empty line.
std::vector<std::string> split_lines(std::string_view content);
std::vector<std::string> read_lines(const std::filesystem::path& path);
void write_lines(const std::filesystem::path& path,
                 const std::vector<std::string>& lines);
std::string join_lines(const std::vector<std::string>& lines);

// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

}  // namespace clfe

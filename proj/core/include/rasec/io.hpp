// Deterministic text output: CSV rows with 17-significant-digit floats,
// UTF-8, '\n' line endings.
#pragma once

#include <string>
#include <vector>

namespace rasec {

// shortest exact-round-trip style formatting via "%.17g"
std::string format_double(double value);

std::string csv_line(const std::vector<std::string>& fields);

// Writes the full content atomically enough for our purposes (single write).
// Throws std::runtime_error with the path on failure.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace rasec

#pragma once

#include <filesystem>
#include <string>

namespace qgstrip {

// Numbers in CSV output: 12 significant digits, '.' decimal separator,
// locale-independent.
std::string fmt_g12(double v);

// Lossless round-trip formatting for config serialization.
std::string fmt_g17(double v);

// Writes content to a temporary file in the target directory, then renames
// it over the destination.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content);

}  // namespace qgstrip

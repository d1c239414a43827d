#pragma once

#include <string>

namespace qsc::io {

std::string read_file(const std::string& path);

/// Writes via a temporary sibling file and rename(2).
void write_file_atomic(const std::string& path, const std::string& content);

std::string sha256_hex(const std::string& bytes);

}  // namespace qsc::io

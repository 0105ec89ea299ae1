#pragma once

#include <string>
#include <string_view>

namespace exthink {

// Hex-encoded SHA-256 of a byte string.
std::string sha256_hex(std::string_view data);

// Hex-encoded SHA-256 of a file's contents. Throws Error("file-unreadable")
// if the file cannot be opened.
std::string sha256_file(const std::string& path);

} // namespace exthink

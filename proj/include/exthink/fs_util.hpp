#pragma once

#include "exthink/errors.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace exthink {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("file-unreadable", "cannot open file: " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Writes via a temp file in the same directory, then renames into place,
// so readers never observe a half-written file.
inline void write_file_atomic(const std::string& path, std::string_view data) {
    namespace fs = std::filesystem;
    fs::path target(path);
    if (target.has_parent_path()) {
        fs::create_directories(target.parent_path());
    }
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error("file-unwritable", "cannot open file for writing: " + tmp.string());
        }
        out.write(data.data(), static_cast<std::streamsize>(data.size()));
        if (!out) {
            throw Error("file-unwritable", "write failed: " + tmp.string());
        }
    }
    fs::rename(tmp, target);
}

} // namespace exthink

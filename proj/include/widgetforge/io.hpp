#pragma once

#include <string>

namespace wf::io {

// Whole-file read. Throws Error{IoError}.
std::string read_file(const std::string& path);

// Write via a sibling temp file and rename, creating parent directories, so
// readers never observe partial content. Throws Error{IoError}.
void atomic_write_file(const std::string& path, const std::string& content);

} // namespace wf::io

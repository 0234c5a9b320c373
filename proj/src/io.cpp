#include "widgetforge/io.hpp"

#include "widgetforge/error.hpp"

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace wf::io {

namespace fs = std::filesystem;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::IoError, "cannot open \"" + path + "\"");
    std::ostringstream out;
    out << in.rdbuf();
    if (in.bad())
        throw Error(ErrorCode::IoError, "failed to read \"" + path + "\"");
    return out.str();
}

void atomic_write_file(const std::string& path, const std::string& content)
{
    static std::atomic<unsigned> counter { 0 };
    fs::path target(path);
    std::error_code ec;
    if (target.has_parent_path())
        fs::create_directories(target.parent_path(), ec);
    fs::path tmp = target;
    tmp += ".tmp" + std::to_string(counter.fetch_add(1));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error(ErrorCode::IoError, "cannot open \"" + tmp.string() + "\" for writing");
        }
        out << content;
        out.flush();
        if (!out) {
            out.close();
            fs::remove(tmp, ec);
            throw Error(ErrorCode::IoError, "failed to write \"" + tmp.string() + "\"");
        }
    }
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw Error(ErrorCode::IoError, "failed to move temp file onto \"" + path + "\"");
    }
}

} // namespace wf::io

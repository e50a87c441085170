#include "cli/output.hpp"

#include "dixkit/error.hpp"

#include <fmt/format.h>

#include <fstream>
#include <unistd.h>

namespace dixkit::cli {

namespace fs = std::filesystem;

OutputDir::OutputDir(fs::path root, bool force) : root_(std::move(root)), force_(force) {
    std::error_code ec;
    fs::create_directories(root_, ec);
    if (ec || !fs::is_directory(root_)) {
        throw DataError(fmt::format("cannot create output directory '{}'", root_.string()));
    }
}

fs::path OutputDir::prepare(const fs::path &relative) const {
    const fs::path target = root_ / relative;
    if (fs::exists(target) && !force_) {
        throw OverwriteRefused(fmt::format("'{}' already exists (use --force to overwrite)", target.string()));
    }
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
    if (ec) {
        throw DataError(fmt::format("cannot create directory '{}'", target.parent_path().string()));
    }
    return target;
}

fs::path OutputDir::write_with(const fs::path &relative, const std::function<void(const fs::path &)> &produce) const {
    const fs::path target = prepare(relative);
    fs::path tmp = target;
    tmp += fmt::format(".tmp-{}", ::getpid());
    try {
        produce(tmp);
        fs::rename(tmp, target);
    } catch (...) {
        std::error_code ec;
        fs::remove(tmp, ec);
        throw;
    }
    return target;
}

fs::path OutputDir::write(const fs::path &relative, const std::function<void(std::ostream &)> &fill) const {
    return write_with(relative, [&](const fs::path &tmp) {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) {
            throw DataError(fmt::format("cannot write '{}'", tmp.string()));
        }
        fill(out);
        out.flush();
        if (!out) {
            throw DataError(fmt::format("write to '{}' failed", tmp.string()));
        }
    });
}

fs::path OutputDir::write_text(const fs::path &relative, const std::string &content) const {
    return write(relative, [&](std::ostream &out) { out << content; });
}

}  // namespace dixkit::cli

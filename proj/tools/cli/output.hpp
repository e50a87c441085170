#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace dixkit::cli {

/// Output directory for one subcommand run. Created if absent; existing files
/// are only replaced with `force`. Every file is written to a temporary
/// sibling and renamed into place.
class OutputDir {
  public:
    OutputDir(std::filesystem::path root, bool force);

    [[nodiscard]] const std::filesystem::path &root() const noexcept { return root_; }

    /// Writes `relative` (parent directories created) via `fill`.
    std::filesystem::path write(const std::filesystem::path &relative, const std::function<void(std::ostream &)> &fill) const;
    std::filesystem::path write_text(const std::filesystem::path &relative, const std::string &content) const;

    /// Calls `produce(tmp_path)` to create the file, then renames it.
    std::filesystem::path write_with(const std::filesystem::path &relative,
                                     const std::function<void(const std::filesystem::path &)> &produce) const;

  private:
    std::filesystem::path prepare(const std::filesystem::path &relative) const;

    std::filesystem::path root_;
    bool force_;
};

/// Thrown when an output exists and --force was not given.
class OverwriteRefused : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace dixkit::cli

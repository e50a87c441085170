#pragma once

#include "dixkit/image.hpp"

#include <filesystem>

namespace dixkit::io {

/// Decodes a PNG or JPEG (chosen by file signature) into 8-bit gray or RGB.
/// Alpha is dropped; 16-bit PNGs are rejected. Throws DataError.
Image read_image(const std::filesystem::path &path);

void write_png(const std::filesystem::path &path, const Image &img);
void write_jpeg(const std::filesystem::path &path, const Image &img, int quality = 95);

/// Dispatches on the extension (.png, .jpg, .jpeg).
void write_image(const std::filesystem::path &path, const Image &img);

}  // namespace dixkit::io

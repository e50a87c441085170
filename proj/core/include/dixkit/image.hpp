#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace dixkit {

/// Row-major interleaved 8-bit image with 1 (gray) or 3 (RGB) channels.
class Image {
  public:
    /// Zero-filled image. Throws InvalidArgument on zero dimensions or a
    /// channel count other than 1 or 3.
    Image(std::size_t width, std::size_t height, std::size_t channels);
    Image(std::size_t width, std::size_t height, std::size_t channels, std::vector<std::uint8_t> data);

    [[nodiscard]] std::size_t width() const noexcept { return width_; }
    [[nodiscard]] std::size_t height() const noexcept { return height_; }
    [[nodiscard]] std::size_t channels() const noexcept { return channels_; }

    [[nodiscard]] std::uint8_t at(std::size_t x, std::size_t y, std::size_t c) const noexcept {
        return data_[(y * width_ + x) * channels_ + c];
    }
    std::uint8_t &at(std::size_t x, std::size_t y, std::size_t c) noexcept {
        return data_[(y * width_ + x) * channels_ + c];
    }

    [[nodiscard]] std::span<const std::uint8_t> data() const noexcept { return data_; }
    [[nodiscard]] std::span<std::uint8_t> data() noexcept { return data_; }

    friend bool operator==(const Image &, const Image &) = default;

  private:
    std::size_t width_;
    std::size_t height_;
    std::size_t channels_;
    std::vector<std::uint8_t> data_;
};

/// Round half up, then clamp to [0, 255].
[[nodiscard]] std::uint8_t quantize(double value) noexcept;

}  // namespace dixkit

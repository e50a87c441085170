#include "dixkit/image.hpp"

#include "dixkit/error.hpp"

#include <fmt/format.h>

#include <cmath>

namespace dixkit {

namespace {
void check_shape(std::size_t width, std::size_t height, std::size_t channels) {
    if (width == 0 || height == 0) {
        throw InvalidArgument(fmt::format("image dimensions must be positive (got {}x{})", width, height));
    }
    if (channels != 1 && channels != 3) {
        throw InvalidArgument(fmt::format("image must have 1 or 3 channels (got {})", channels));
    }
}
}  // namespace

Image::Image(std::size_t width, std::size_t height, std::size_t channels)
    : width_(width), height_(height), channels_(channels) {
    check_shape(width, height, channels);
    data_.assign(width * height * channels, 0);
}

Image::Image(std::size_t width, std::size_t height, std::size_t channels, std::vector<std::uint8_t> data)
    : width_(width), height_(height), channels_(channels), data_(std::move(data)) {
    check_shape(width, height, channels);
    if (data_.size() != width * height * channels) {
        throw InvalidArgument(fmt::format("image data has {} samples, expected {}x{}x{} = {}", data_.size(), width,
                                          height, channels, width * height * channels));
    }
}

std::uint8_t quantize(double value) noexcept {
    const double r = std::floor(value + 0.5);
    if (!(r > 0.0)) {
        return 0;
    }
    if (r >= 255.0) {
        return 255;
    }
    return static_cast<std::uint8_t>(r);
}

}  // namespace dixkit

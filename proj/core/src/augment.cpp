#include "dixkit/augment.hpp"

#include "dixkit/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>

namespace dixkit::augment {

namespace {

void check_fraction(double fraction) {
    if (!(fraction > 0.0 && fraction <= 1.0)) {
        throw InvalidArgument(fmt::format("crop fraction must be in (0, 1] (got {})", fraction));
    }
}

Image crop(const Image &img, std::size_t x0, std::size_t y0, std::size_t w, std::size_t h) {
    Image out(w, h, img.channels());
    const std::size_t row = w * img.channels();
    for (std::size_t y = 0; y < h; ++y) {
        const auto src = img.data().subspan(((y0 + y) * img.width() + x0) * img.channels(), row);
        std::copy(src.begin(), src.end(), out.data().begin() + static_cast<std::ptrdiff_t>(y * row));
    }
    return out;
}

std::size_t clamp_index(std::ptrdiff_t i, std::size_t size) {
    if (i < 0) {
        return 0;
    }
    return std::min(static_cast<std::size_t>(i), size - 1);
}

template <typename F>
Image map_samples(const Image &img, F &&f) {
    Image out = img;
    for (auto &v : out.data()) {
        v = f(v);
    }
    return out;
}

}  // namespace

Image hflip(const Image &img) {
    Image out(img.width(), img.height(), img.channels());
    for (std::size_t y = 0; y < img.height(); ++y) {
        for (std::size_t x = 0; x < img.width(); ++x) {
            for (std::size_t c = 0; c < img.channels(); ++c) {
                out.at(img.width() - 1 - x, y, c) = img.at(x, y, c);
            }
        }
    }
    return out;
}

Image vflip(const Image &img) {
    Image out(img.width(), img.height(), img.channels());
    const std::size_t row = img.width() * img.channels();
    for (std::size_t y = 0; y < img.height(); ++y) {
        const auto src = img.data().subspan(y * row, row);
        std::copy(src.begin(), src.end(), out.data().begin() + static_cast<std::ptrdiff_t>((img.height() - 1 - y) * row));
    }
    return out;
}

std::size_t crop_extent(std::size_t side, double fraction) {
    check_fraction(fraction);
    const double rounded = std::floor(fraction * static_cast<double>(side) + 0.5);
    return std::clamp(static_cast<std::size_t>(rounded), std::size_t{ 1 }, side);
}

Image center_crop(const Image &img, double fraction) {
    const std::size_t w = crop_extent(img.width(), fraction);
    const std::size_t h = crop_extent(img.height(), fraction);
    return crop(img, (img.width() - w) / 2, (img.height() - h) / 2, w, h);
}

Image random_crop(const Image &img, double fraction, CounterRng &rng) {
    const std::size_t w = crop_extent(img.width(), fraction);
    const std::size_t h = crop_extent(img.height(), fraction);
    const auto x0 = static_cast<std::size_t>(rng.uniform_int(img.width() - w + 1));
    const auto y0 = static_cast<std::size_t>(rng.uniform_int(img.height() - h + 1));
    return crop(img, x0, y0, w, h);
}

std::vector<double> gaussian_kernel(double sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw InvalidArgument(fmt::format("gaussian sigma must be positive (got {})", sigma));
    }
    const auto radius = static_cast<std::ptrdiff_t>(std::ceil(3.0 * sigma));
    std::vector<double> kernel(static_cast<std::size_t>(2 * radius + 1));
    double sum = 0.0;
    for (std::ptrdiff_t i = -radius; i <= radius; ++i) {
        const double w = std::exp(-static_cast<double>(i * i) / (2.0 * sigma * sigma));
        kernel[static_cast<std::size_t>(i + radius)] = w;
        sum += w;
    }
    for (double &w : kernel) {
        w /= sum;
    }
    return kernel;
}

Image gaussian_blur(const Image &img, double sigma) {
    const std::vector<double> kernel = gaussian_kernel(sigma);
    const auto radius = static_cast<std::ptrdiff_t>(kernel.size() / 2);
    const std::size_t w = img.width();
    const std::size_t h = img.height();
    const std::size_t ch = img.channels();

    std::vector<double> horizontal(w * h * ch, 0.0);
    for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) {
            for (std::size_t c = 0; c < ch; ++c) {
                double acc = 0.0;
                for (std::ptrdiff_t k = -radius; k <= radius; ++k) {
                    const std::size_t sx = clamp_index(static_cast<std::ptrdiff_t>(x) + k, w);
                    acc += kernel[static_cast<std::size_t>(k + radius)] * img.at(sx, y, c);
                }
                horizontal[(y * w + x) * ch + c] = acc;
            }
        }
    }

    Image out(w, h, ch);
    for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) {
            for (std::size_t c = 0; c < ch; ++c) {
                double acc = 0.0;
                for (std::ptrdiff_t k = -radius; k <= radius; ++k) {
                    const std::size_t sy = clamp_index(static_cast<std::ptrdiff_t>(y) + k, h);
                    acc += kernel[static_cast<std::size_t>(k + radius)] * horizontal[(sy * w + x) * ch + c];
                }
                out.at(x, y, c) = quantize(acc);
            }
        }
    }
    return out;
}

Image linear_contrast(const Image &img, double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw InvalidArgument(fmt::format("contrast alpha must be positive (got {})", alpha));
    }
    return map_samples(img, [alpha](std::uint8_t v) { return quantize(127.5 + alpha * (static_cast<double>(v) - 127.5)); });
}

Image additive_gaussian_noise(const Image &img, double scale, CounterRng &rng) {
    if (!(scale >= 0.0) || !std::isfinite(scale)) {
        throw InvalidArgument(fmt::format("noise scale must be non-negative (got {})", scale));
    }
    if (scale == 0.0) {
        return img;
    }
    return map_samples(img, [&](std::uint8_t v) { return quantize(static_cast<double>(v) + scale * rng.normal()); });
}

Image median_filter(const Image &img, int k) {
    if (k < 3 || k % 2 == 0) {
        throw InvalidArgument(fmt::format("median window must be odd and >= 3 (got {})", k));
    }
    const std::ptrdiff_t radius = k / 2;
    const std::size_t w = img.width();
    const std::size_t h = img.height();
    Image out(w, h, img.channels());
    std::vector<std::uint8_t> window(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
    const auto middle = window.begin() + static_cast<std::ptrdiff_t>(window.size() / 2);
    for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) {
            for (std::size_t c = 0; c < img.channels(); ++c) {
                std::size_t n = 0;
                for (std::ptrdiff_t dy = -radius; dy <= radius; ++dy) {
                    const std::size_t sy = clamp_index(static_cast<std::ptrdiff_t>(y) + dy, h);
                    for (std::ptrdiff_t dx = -radius; dx <= radius; ++dx) {
                        window[n++] = img.at(clamp_index(static_cast<std::ptrdiff_t>(x) + dx, w), sy, c);
                    }
                }
                std::nth_element(window.begin(), middle, window.end());
                out.at(x, y, c) = *middle;
            }
        }
    }
    return out;
}

Image contrast_enhance(const Image &img, double gamma) {
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw InvalidArgument(fmt::format("gamma must be positive (got {})", gamma));
    }
    std::array<std::uint8_t, 256> lut{};
    for (std::size_t v = 0; v < lut.size(); ++v) {
        lut[v] = quantize(255.0 * std::pow(static_cast<double>(v) / 255.0, gamma));
    }
    return map_samples(img, [&lut](std::uint8_t v) { return lut[v]; });
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

}  // namespace

void validate(const AugmentSpec &spec) {
    for (const Operator &op : spec.ops) {
        std::visit(overloaded{
                       [](const RandomCrop &o) { check_fraction(o.fraction); },
                       [](const CenterCrop &o) { check_fraction(o.fraction); },
                       [](const HFlip &) {},
                       [](const VFlip &) {},
                       [](const GaussianBlur &o) {
                           if (!(o.sigma > 0.0) || !std::isfinite(o.sigma))
                               throw InvalidArgument(fmt::format("gaussian_blur: sigma must be positive (got {})", o.sigma));
                       },
                       [](const LinearContrast &o) {
                           if (!(o.alpha > 0.0) || !std::isfinite(o.alpha))
                               throw InvalidArgument(fmt::format("linear_contrast: alpha must be positive (got {})", o.alpha));
                       },
                       [](const AdditiveGaussianNoise &o) {
                           if (!(o.scale >= 0.0) || !std::isfinite(o.scale))
                               throw InvalidArgument(fmt::format("additive_gaussian_noise: scale must be >= 0 (got {})", o.scale));
                       },
                       [](const MedianFilter &o) {
                           if (o.k < 3 || o.k % 2 == 0)
                               throw InvalidArgument(fmt::format("median_filter: k must be odd and >= 3 (got {})", o.k));
                       },
                       [](const ContrastEnhance &o) {
                           if (!(o.gamma > 0.0) || !std::isfinite(o.gamma))
                               throw InvalidArgument(fmt::format("contrast_enhance: gamma must be positive (got {})", o.gamma));
                       },
                   },
                   op);
    }
}

Image apply_pipeline(const Image &img, const AugmentSpec &spec) {
    CounterRng rng(spec.seed);
    return apply_pipeline(img, spec, rng);
}

Image apply_pipeline(const Image &img, const AugmentSpec &spec, CounterRng &rng) {
    validate(spec);
    Image current = img;
    for (const Operator &op : spec.ops) {
        current = std::visit(overloaded{
                                 [&](const RandomCrop &o) { return random_crop(current, o.fraction, rng); },
                                 [&](const CenterCrop &o) { return center_crop(current, o.fraction); },
                                 [&](const HFlip &) { return hflip(current); },
                                 [&](const VFlip &) { return vflip(current); },
                                 [&](const GaussianBlur &o) { return gaussian_blur(current, o.sigma); },
                                 [&](const LinearContrast &o) { return linear_contrast(current, o.alpha); },
                                 [&](const AdditiveGaussianNoise &o) { return additive_gaussian_noise(current, o.scale, rng); },
                                 [&](const MedianFilter &o) { return median_filter(current, o.k); },
                                 [&](const ContrastEnhance &o) { return contrast_enhance(current, o.gamma); },
                             },
                             op);
    }
    return current;
}

}  // namespace dixkit::augment

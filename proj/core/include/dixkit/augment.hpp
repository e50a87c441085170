#pragma once

#include "dixkit/image.hpp"
#include "dixkit/rng.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace dixkit::augment {

// Geometric operators.

Image hflip(const Image &img);
Image vflip(const Image &img);

/// Output side = max(1, round_half_up(fraction * side)); offsets
/// floor((side - out) / 2). Requires 0 < fraction <= 1.
Image center_crop(const Image &img, double fraction);

/// Same output size as center_crop; the x offset then the y offset are drawn
/// uniformly from [0, side - out] with `rng`.
Image random_crop(const Image &img, double fraction, CounterRng &rng);

/// Size of a crop of `side` pixels at `fraction`.
[[nodiscard]] std::size_t crop_extent(std::size_t side, double fraction);

// Photometric operators.

/// Normalized discrete Gaussian of radius ceil(3 * sigma); element r is the
/// weight at offset r - radius.
[[nodiscard]] std::vector<double> gaussian_kernel(double sigma);

/// Separable Gaussian blur with edge replication; both passes accumulate in
/// float64 and the result is rounded half up once.
Image gaussian_blur(const Image &img, double sigma);

/// v -> clamp(round(127.5 + alpha * (v - 127.5))).
Image linear_contrast(const Image &img, double alpha);

/// v -> clamp(round(v + scale * z)), one standard normal z per sample drawn
/// in storage order.
Image additive_gaussian_noise(const Image &img, double scale, CounterRng &rng);

/// k x k median per channel with edge replication. k odd and >= 3.
Image median_filter(const Image &img, int k);

/// v -> clamp(round(255 * (v / 255)^gamma)).
Image contrast_enhance(const Image &img, double gamma);

// Pipelines.

struct RandomCrop {
    double fraction = 0.9;
};
struct CenterCrop {
    double fraction = 0.9;
};
struct HFlip {};
struct VFlip {};
struct GaussianBlur {
    double sigma = 1.0;
};
struct LinearContrast {
    double alpha = 1.5;
};
struct AdditiveGaussianNoise {
    double scale = 10.0;
};
struct MedianFilter {
    int k = 3;
};
struct ContrastEnhance {
    double gamma = 0.8;
};

using Operator = std::variant<RandomCrop, CenterCrop, HFlip, VFlip, GaussianBlur, LinearContrast, AdditiveGaussianNoise,
                              MedianFilter, ContrastEnhance>;

struct AugmentSpec {
    std::vector<Operator> ops;
    std::uint64_t seed = 0;
};

/// Throws InvalidArgument if any operator parameter is out of its domain.
void validate(const AugmentSpec &spec);

/// Applies the operators in order. Stochastic operators draw from one
/// generator keyed by spec.seed, in sequence.
Image apply_pipeline(const Image &img, const AugmentSpec &spec);

/// As above, drawing from the caller's generator (per-image streams).
Image apply_pipeline(const Image &img, const AugmentSpec &spec, CounterRng &rng);

/// Line-oriented text format:
///
///     # comment
///     seed=42
///     op=hflip
///     op=gaussian_blur sigma=1.0
///     op=random_crop fraction=0.9
///
/// Omitted parameters take the documented defaults.
AugmentSpec parse_spec(const std::string &text, const std::string &source = "<spec>");
AugmentSpec load_spec(const std::string &path);
[[nodiscard]] std::string format_spec(const AugmentSpec &spec);

/// `op=name key=value` line for a single operator.
[[nodiscard]] std::string describe(const Operator &op);

}  // namespace dixkit::augment

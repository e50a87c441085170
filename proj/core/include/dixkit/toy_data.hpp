#pragma once

#include "dixkit/trainer.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace dixkit::toy {

/// Labeled feature vectors plus class names.
struct FeatureTable {
    std::vector<std::string> class_names;
    nn::LabeledData data;
};

/// Four-class two-moons variant: two interleaved moon pairs side by side,
/// Gaussian jitter of `noise`, then standardized to zero mean and unit
/// variance per feature. Sample ids are `toy-00000`, ... in generation order.
FeatureTable make_moons(std::size_t per_class, double noise, std::uint64_t seed);

/// Format:
///
///     # classes=<c1>,<c2>,...      (optional; else first-use order)
///     sample_id,label,<feature1>,...,<featureD>
///
void write_features(std::ostream &out, const FeatureTable &table);
FeatureTable read_features(const std::filesystem::path &path);
FeatureTable read_features(std::istream &in, const std::string &source);

}  // namespace dixkit::toy

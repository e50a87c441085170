#pragma once

#include <cstdint>
#include <span>

namespace dixkit {

/// SplitMix64 finalizer. Bijective on 64-bit words.
[[nodiscard]] constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Derives an independent stream seed from a base seed and a stream index
/// (class index, image index, epoch, ...).
[[nodiscard]] constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    return splitmix64(seed ^ splitmix64(stream + 0x632BE59BD9B4E019ULL));
}

/// Counter-based 64-bit generator: the k-th draw (k = 0, 1, ...) is
/// splitmix64(key + k * 0x9E3779B97F4A7C15), which is exactly the reference
/// SplitMix64 sequence seeded with `key`. Every derived quantity below
/// uses integer or float64 arithmetic only, so a fixed key reproduces the same
/// sequence on any platform.
///
/// The algorithm is part of the file-format contract: augmentation logs record
/// the key, and another implementation can regenerate the same outputs.
class CounterRng {
  public:
    explicit constexpr CounterRng(std::uint64_t key = 0) noexcept : key_(key) {}

    constexpr std::uint64_t next_u64() noexcept {
        return splitmix64(key_ + (counter_++) * 0x9E3779B97F4A7C15ULL);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() noexcept;

    /// Uniform in (0, 1].
    double uniform_open_zero() noexcept;

    /// Uniform integer in [0, bound) by rejection (no modulo bias).
    /// `bound` must be positive.
    std::uint64_t uniform_int(std::uint64_t bound) noexcept;

    /// Uniform real in [lo, hi).
    double uniform_real(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller; consumes exactly two draws and uses the
    /// cosine branch only.
    double normal() noexcept;

    [[nodiscard]] constexpr std::uint64_t key() const noexcept { return key_; }
    [[nodiscard]] constexpr std::uint64_t counter() const noexcept { return counter_; }

  private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Fisher-Yates shuffle driven by CounterRng, from the back of the range.
template <typename T>
void shuffle(std::span<T> values, CounterRng &rng) noexcept {
    for (std::size_t i = values.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(rng.uniform_int(i));
        using std::swap;
        swap(values[i - 1], values[j]);
    }
}

}  // namespace dixkit

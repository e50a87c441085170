#include "dixkit/rng.hpp"

#include <cmath>
#include <numbers>

namespace dixkit {

namespace {
constexpr double kInv2Pow53 = 1.0 / 9007199254740992.0;
}

double CounterRng::uniform() noexcept {
    return static_cast<double>(next_u64() >> 11) * kInv2Pow53;
}

double CounterRng::uniform_open_zero() noexcept {
    return static_cast<double>((next_u64() >> 11) + 1) * kInv2Pow53;
}

std::uint64_t CounterRng::uniform_int(std::uint64_t bound) noexcept {
    // reject the top partial block so every residue is equally likely
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
    std::uint64_t x = next_u64();
    while (x >= limit) {
        x = next_u64();
    }
    return x % bound;
}

double CounterRng::normal() noexcept {
    const double u1 = uniform_open_zero();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace dixkit

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace cidr {

/// Engine used for every random draw in the library.
using Engine = std::mt19937_64;

/// Recorded alongside experiment outputs.
inline constexpr std::string_view kRngDescription =
    "std::mt19937_64 seeded per substream; substream seed = splitmix64(seed, stream)";

/// splitmix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// A (seed, stream) pair naming an independent random substream. Deriving a
/// child is a pure function, so any replication or class can be regenerated
/// in isolation.
struct RngSeed {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;

    constexpr std::uint64_t key() const noexcept { return mix64(mix64(seed) ^ mix64(stream + 0x632BE59BD9B4E019ULL)); }
    constexpr RngSeed child(std::uint64_t sub) const noexcept { return {key(), sub}; }
    Engine engine() const { return Engine(key()); }
};

}  // namespace cidr

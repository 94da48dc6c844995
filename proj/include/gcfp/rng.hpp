#pragma once

#include <cstdint>

namespace gcfp {

// splitmix64 finalizer; full-period 64-bit mixer.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Counter-based uniform generator: sample i, slot s is a pure function of
// (seed, stream, i, s). Reports quoting a seed are therefore replayable
// bit-for-bit regardless of evaluation order.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key_(splitmix64(seed ^ splitmix64(stream * 0xd1b54a32d192ed03ULL))) {}

    std::uint64_t bits(std::uint64_t index, std::uint32_t slot) const {
        return splitmix64(key_ + index * 0x9e3779b97f4a7c15ULL + slot * 0xbf58476d1ce4e5b9ULL);
    }

    // uniform in [0, 1), 53-bit resolution
    double unit(std::uint64_t index, std::uint32_t slot) const {
        return static_cast<double>(bits(index, slot) >> 11) * 0x1.0p-53;
    }

    double in_range(double lo, double hi, std::uint64_t index, std::uint32_t slot) const {
        return lo + unit(index, slot) * (hi - lo);
    }

private:
    std::uint64_t key_;
};

// Stream ids keep independent checks decorrelated under a shared seed.
namespace stream {
inline constexpr std::uint64_t self_map = 1;
inline constexpr std::uint64_t takahashi = 2;
inline constexpr std::uint64_t segment = 3;
inline constexpr std::uint64_t graph_axioms = 4;
inline constexpr std::uint64_t interval_convexity = 5;
inline constexpr std::uint64_t condition = 6;
inline constexpr std::uint64_t monotone = 7;
inline constexpr std::uint64_t dominance = 8;
inline constexpr std::uint64_t edge_pairs = 9;
inline constexpr std::uint64_t starts = 10;
inline constexpr std::uint64_t triangle = 11;
} // namespace stream

} // namespace gcfp

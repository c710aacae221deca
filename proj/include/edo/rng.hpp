#pragma once

#include <cstdint>

namespace edo {

// Counter-based deterministic generator: SplitMix64 finalizer applied to
// key + counter. split() derives non-overlapping child streams, so
// multi-seed sweeps stay reproducible regardless of scheduling order.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : key_(mix(seed + kGolden)) {}
    Rng(std::uint64_t seed, std::uint64_t stream)
        : key_(mix(mix(seed + kGolden) ^ mix(stream + kGolden))) {}

    std::uint64_t next() { return mix(key_ + (++counter_) * kGolden); }

    // Uniform in [0, m), rejection-sampled so every value is exactly equiprobable.
    std::uint64_t below(std::uint64_t m) {
        const std::uint64_t threshold = (0 - m) % m;  // 2^64 mod m
        std::uint64_t x = next();
        while (x < threshold) x = next();
        return x % m;
    }

    int below_int(int m) { return static_cast<int>(below(static_cast<std::uint64_t>(m))); }

    // Uniform double in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Independent child stream; unaffected by how much this stream has been used.
    Rng split(std::uint64_t stream) const {
        Rng child(0);
        child.key_ = mix(key_ ^ mix(stream + kGolden));
        return child;
    }

private:
    static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

    static std::uint64_t mix(std::uint64_t x) {
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebULL;
        x ^= x >> 31;
        return x;
    }

    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
};

}  // namespace edo

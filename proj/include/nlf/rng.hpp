#pragma once

#include <cstdint>

namespace nlf {

// Counter-based pseudorandom generator (SplitMix64 mixing of seed + i*gamma).
// Every draw is a pure function of (seed, counter), so streams are
// reproducible and trivially parallel.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t bits(std::uint64_t counter) const {
        std::uint64_t z = seed_ + (counter + 1) * 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform double in [0, 1)
    double uniform(std::uint64_t counter) const {
        return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
    }

    bool coin(std::uint64_t counter) const { return (bits(counter) & 1ull) != 0; }

private:
    std::uint64_t seed_;
};

} // namespace nlf

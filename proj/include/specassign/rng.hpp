#pragma once

#include <cstdint>

namespace specassign::plant {

// Counter-based 64-bit generator: draw i is splitmix64(key + i * golden).
// Output depends only on (seed, counter), so identical seeds replay identical
// streams bit-for-bit and disjoint counter ranges give independent draws.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : key_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = key_ + (++counter_) * 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform on [0, 1), 53-bit resolution.
    double next_uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller; always consumes exactly two uniforms.
    double next_gaussian();

    // +1 or -1 with equal probability.
    double next_sign() {
        return (next_u64() & 1ull) ? 1.0 : -1.0;
    }

    std::uint64_t draw_count() const { return counter_; }

    // Derives an independent stream key, e.g. one per plant instance.
    static std::uint64_t split(std::uint64_t seed, std::uint64_t stream);

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace specassign::plant

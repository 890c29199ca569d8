#pragma once

#include <cassert>
#include <cstdint>
#include <random>

namespace netrecon {

// SplitMix64 finalizer, used as a general-purpose 64-bit mixer.
inline constexpr uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Tags for hierarchical seed derivation: master -> dataset -> repeat -> cascade.
// Every stage of a run gets its own stream so stages are independent and
// individually replayable.
enum class SeedStream : uint64_t {
    Dataset = 1,
    Repeat = 2,
    Cascade = 3,
    Scoring = 4,
};

inline constexpr uint64_t derive_seed(uint64_t parent, SeedStream tag, uint64_t index) {
    uint64_t x = splitmix64(parent ^ splitmix64(static_cast<uint64_t>(tag)));
    return splitmix64(x ^ index);
}

// Thin wrapper around mt19937_64 exposing only portable transforms.  The raw
// engine output is fully specified by the standard; std distributions are
// not, so uniform/bernoulli are implemented here to keep sequences identical
// across standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    // Uniform double in [0, 1), 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    // Uniform integer in [0, n), unbiased via rejection.
    uint32_t uniform_int(uint32_t n) {
        assert(n > 0);
        const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x = next_u64();
        while (x >= limit) x = next_u64();
        return static_cast<uint32_t>(x % n);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace netrecon

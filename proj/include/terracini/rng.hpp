#pragma once

#include <cstdint>
#include <random>

namespace terracini {

/// Seeded RNG with a fully specified output sequence. std::mt19937_64 is
/// pinned by the standard; the distributions below avoid
/// std::uniform_int_distribution, whose mapping is implementation-defined,
/// so the same seed gives the same bytes on every platform.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % bound;
    }

    /// Uniform integer in [lo, hi] inclusive.
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool coin() { return (engine_() & 1) != 0; }

    /// Decorrelated child seed for work item `index`; used to keep parallel
    /// scans independent of scheduling.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
        // splitmix64 step
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace terracini

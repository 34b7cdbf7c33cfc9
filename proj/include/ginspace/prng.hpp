#pragma once

#include <cstdint>

#include "errors.hpp"

namespace ginspace {

/// Deterministic 64-bit generator (splitmix64).  We roll our own rather than
/// using std::mt19937 with std::uniform_int_distribution because the standard
/// distribution's output is implementation-defined; reproducibility across
/// compilers requires controlling every bit of the pipeline.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw from {0, 1, ..., bound-1} by rejection; bias-free.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0)
            throw RandomnessError("below: bound must be positive");
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t draw;
        do {
            draw = next();
        } while (draw >= limit);
        return draw % bound;
    }

    /// Uniform draw from the integers in [lo, hi], inclusive.
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        if (lo > hi)
            throw RandomnessError("between: empty range");
        const std::uint64_t width =
            static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        return lo + static_cast<std::int64_t>(below(width));
    }

  private:
    std::uint64_t state_;
};

/// Stafford mix13 finalizer; used to derive stream seeds so that per-trial
/// generators are decorrelated from one another and from the master stream.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Child seed for stream `index` of master seed `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed ^ mix64(index + 0x9e3779b97f4a7c15ULL));
}

} // namespace ginspace

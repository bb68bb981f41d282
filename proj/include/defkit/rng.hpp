#pragma once

#include <cstdint>

namespace defkit {

/// splitmix64: tiny deterministic generator. Used instead of <random>
/// distributions so that seeded output is byte-identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi] inclusive.
    long long range(long long lo, long long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(next() % span);
    }

    /// Nonzero uniform in [-m, m] \ {0}.
    long long nonzero(long long m) {
        long long v = range(1, m);
        return (next() & 1) ? v : -v;
    }

private:
    std::uint64_t state_;
};

} // namespace defkit

#pragma once

#include <cstdint>

namespace fdalg {

// splitmix64: tiny, platform-stable stream. All randomized searches take an
// explicit seed and draw from one of these, so runs are reproducible bit for bit.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound). Modulo bias is irrelevant here: draws only feed
    // search heuristics whose results are verified exactly afterwards.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    // Uniform integer in [-b, b].
    long long centered(long long b) {
        return static_cast<long long>(below(static_cast<std::uint64_t>(2 * b + 1))) - b;
    }

private:
    std::uint64_t state_;
};

} // namespace fdalg

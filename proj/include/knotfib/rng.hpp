#pragma once

#include <cstdint>
#include <random>

namespace knotfib {

// Deterministic RNG helper. Uses mt19937_64 raw output with modulo reduction
// instead of std distributions, whose results differ across standard library
// implementations; replayability requires byte-identical streams everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform-ish value in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) { return eng_() % n; }

    // Uniform-ish value in [lo, hi] inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    int sign() { return below(2) ? 1 : -1; }

    // True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::mt19937_64 eng_;
};

} // namespace knotfib

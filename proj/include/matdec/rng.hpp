#pragma once
#include <cstdint>

namespace matdec {

// Deterministic 64-bit linear congruential generator, fixed here so that
// seeded suites reproduce bit-for-bit across machines and reimplementations:
//
//   state <- state * 6364136223846793005 + 1442695040888963407   (mod 2^64)
//
// and each draw returns the top 31 bits of the new state. below(n) reduces by
// plain modulo; the bias is irrelevant at the tiny ranges used here.
struct Lcg {
    uint64_t state;

    explicit Lcg(uint64_t seed = 1) : state(seed) {}

    uint32_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<uint32_t>(state >> 33);
    }

    uint32_t below(uint32_t n) { return next() % n; }

    // inclusive range
    int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<uint32_t>(hi - lo + 1))); }

    bool coin() { return (next() & 1u) != 0; }
};

}  // namespace matdec

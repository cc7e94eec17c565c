#pragma once

#include <cstdint>

namespace arithjet {

// splitmix64: deterministic across platforms, which the verify runner and the
// seeded property suites rely on for byte-identical reports.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform-ish in [0, bound); modulo bias is irrelevant for the test suites
    uint64_t below(uint64_t bound) { return bound ? next() % bound : 0; }

private:
    uint64_t state_;
};

}  // namespace arithjet

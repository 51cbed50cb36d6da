#pragma once

#include <cstdint>

#include "oremod/scalar.hpp"

namespace oremod {

// Deterministic splitmix64 generator.  Self-contained so seeded suites
// produce identical streams on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform-ish integer in [lo, hi]; modulo bias is irrelevant for test
    // sampling purposes.
    long range(long lo, long hi) {
        if (hi <= lo) return lo;
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    // Random rational num/den with |num| <= max_num, 1 <= den <= max_den.
    Scalar rational(long max_num = 9, long max_den = 9) {
        long num = range(-max_num, max_num);
        long den = range(1, max_den);
        return Scalar::rational(num, den);
    }

    Scalar nonzero_rational(long max_num = 9, long max_den = 9) {
        for (;;) {
            Scalar s = rational(max_num, max_den);
            if (!s.is_zero()) return s;
        }
    }

    // Random Gaussian rational.
    Scalar gaussian(long max_num = 5, long max_den = 4) {
        return rational(max_num, max_den) + Scalar::i() * rational(max_num, max_den);
    }

    Scalar nonzero_gaussian(long max_num = 5, long max_den = 4) {
        for (;;) {
            Scalar s = gaussian(max_num, max_den);
            if (!s.is_zero()) return s;
        }
    }

private:
    std::uint64_t state_;
};

} // namespace oremod

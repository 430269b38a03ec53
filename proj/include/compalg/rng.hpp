#pragma once

#include <cstdint>
#include <vector>

#include "compalg/rational.hpp"

namespace compalg {

/// Deterministic splitmix64 generator. std::uniform_int_distribution is
/// implementation-defined, so all sampling goes through this to keep CLI
/// output and test fixtures byte-identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi], inclusive. Rejection-free modulo bias is
    /// irrelevant for the tiny ranges used here, but we reject anyway.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return lo + static_cast<std::int64_t>(v % span);
    }

    /// Small rational with numerator in [-9, 9] and denominator in [1, 4].
    Rational small_rational() {
        return Rational(uniform_int(-9, 9), uniform_int(1, 4));
    }

    /// Integer-coordinate sample point in [-3, 3]^n.
    std::vector<Rational> grid_point(int n) {
        std::vector<Rational> p;
        p.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) p.emplace_back(uniform_int(-3, 3));
        return p;
    }

private:
    std::uint64_t state_;
};

}  // namespace compalg

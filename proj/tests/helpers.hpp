#pragma once

#include "fredpair/matrix.hpp"

#include <cstdint>

namespace testutil {

// Deterministic 64-bit mixer for reproducible property tests.
struct Mix64 {
    std::uint64_t state;
    explicit Mix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
    // Uniform in [lo, hi].
    long span(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

inline fredpair::Matrix random_matrix(Mix64& g, std::size_t rows, std::size_t cols,
                                      long lo = -3, long hi = 3) {
    fredpair::Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = fredpair::Rational(g.span(lo, hi));
    return m;
}

} // namespace testutil

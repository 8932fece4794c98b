#pragma once

#include <random>
#include <vector>

#include "quadpower/qint.hpp"
#include "quadpower/quadratic.hpp"

namespace qptest {

using quadpower::Int;

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed5eedULL);
    return gen;
}

inline long rand_long(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline Int rand_int(long lo, long hi) { return Int(rand_long(lo, hi)); }

/// Random ring element of Q(sqrt(d)) with valid parity.
inline quadpower::QuadInt rand_qint(quadpower::FieldDisc fd, long half_range) {
    long u = rand_long(-half_range, half_range);
    long v = rand_long(-half_range, half_range);
    if (fd.halves_allowed) {
        if (((u - v) % 2 + 2) % 2 != 0) u += 1;
        return quadpower::QuadInt(u, v, fd);
    }
    return quadpower::QuadInt(2 * u, 2 * v, fd);
}

/// One representative per supported discriminant.
inline const std::vector<quadpower::MonicQuadratic>& representatives() {
    static const std::vector<quadpower::MonicQuadratic> reps = {
        {1, 2},   // -7
        {1, 3},   // -11
        {1, 5},   // -19
        {1, 11},  // -43
        {1, 17},  // -67
        {1, 41},  // -163
        {1, 1},   // -3
        {0, 2},   // -8
        {0, 1},   // -4
        {1, 6},   // -23
    };
    return reps;
}

}  // namespace qptest

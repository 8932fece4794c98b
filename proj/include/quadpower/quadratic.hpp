#pragma once

#include <vector>

#include "quadpower/intmath.hpp"

namespace quadpower {

/// Monic quadratic x^2 + a x + b with discriminant a^2 - 4b.
struct MonicQuadratic {
    Int a, b;

    Int disc() const { return a * a - 4 * b; }
    Int eval(const Int& x) const { return x * x + a * x + b; }

    friend bool operator==(const MonicQuadratic& f, const MonicQuadratic& g) {
        return f.a == g.a && f.b == g.b;
    }
};

/// Integer solutions t of f(t) = c, descending (at most two).
inline std::vector<Int> integer_preimages(const MonicQuadratic& f,
                                          const Int& c) {
    std::vector<Int> out;
    Int disc = f.a * f.a - 4 * (f.b - c);
    Int s;
    if (!is_square(disc, s)) return out;
    for (const Int& num : {Int(-f.a + s), Int(-f.a - s)}) {
        if (mod_floor(num, 2) == 0) out.push_back(num / 2);
        if (s == 0) break;
    }
    return out;
}

}  // namespace quadpower

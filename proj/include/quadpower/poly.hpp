#pragma once

#include <vector>

#include "quadpower/intmath.hpp"

namespace quadpower {

/// Dense integer polynomial, coefficients ascending by degree.
struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) {
        normalize();
    }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool is_zero() const { return c.empty(); }
    long degree() const { return static_cast<long>(c.size()) - 1; }
    const Int& leading() const { return c.back(); }

    Int eval(const Int& x) const {
        Int acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
};

/// Upper bound on |root| for any real root: min of the Cauchy bound
/// 1 + max|c_i|/|c_n| and the Fujiwara bound 2 max_k (|c_{n-k}|/|c_n|)^(1/k).
Int integer_root_bound(const IntPoly& p);

/// All integer roots, multiplicity collapsed, ascending. Powers of x are
/// stripped first (contributing the root 0); degrees up to three are solved
/// exactly, higher degrees scan divisors of the constant term up to the
/// root bound. Requires a nonzero polynomial.
std::vector<Int> integer_roots(const IntPoly& p);

}  // namespace quadpower

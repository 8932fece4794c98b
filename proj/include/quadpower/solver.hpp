#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "quadpower/bound.hpp"
#include "quadpower/poly.hpp"
#include "quadpower/quadratic.hpp"

namespace quadpower {

/// One solution of y^q = f(x); the identity is re-verified on construction.
struct Solution {
    Int x, y;
    unsigned q;

    Solution(const MonicQuadratic& f, Int x_, Int y_, unsigned q_);

    friend bool operator==(const Solution& a, const Solution& b) {
        return a.q == b.q && a.x == b.x && a.y == b.y;
    }
    friend bool operator<(const Solution& a, const Solution& b) {
        if (a.q != b.q) return a.q < b.q;
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

struct Completeness {
    bool provably_complete = true;
    Int bound = 0;  // search bound when not provably complete

    static Completeness proven() { return {true, 0}; }
    static Completeness up_to(Int n) { return {false, std::move(n)}; }
};

struct SolveOptions {
    Int search_bound = 10000;
    bool include_trivial = false;  // also report |y| <= 1
};

/// Everything known about y^q = f(x): solutions sorted by (q, x, y) with no
/// duplicates, and a completeness certificate per checked exponent.
struct SolutionSet {
    MonicQuadratic f;
    ExponentPlan plan;
    std::vector<Solution> solutions;
    std::map<unsigned, Completeness> completeness;
};

/// All integer (x, y) with y^2 = f(x), including |y| <= 1, via the divisor
/// pairing (2y - X)(2y + X) = -D for X = 2x + a. Complete.
std::vector<Solution> solve_q2(const MonicQuadratic& f);

/// Coefficient of sqrt(D) in (U + V sqrt(D))^q as a polynomial in U for
/// fixed V: sum over odd k of C(q,k) U^(q-k) V^k D^((k-1)/2).
IntPoly imag_coeff_poly(unsigned q, const Int& D, const Int& V);

/// Rational part of (U + V sqrt(D))^q: sum over even k of
/// C(q,k) U^(q-k) V^k D^(k/2).
Int real_coeff(unsigned q, const Int& D, const Int& U, const Int& V);

/// Complete solve of y^q = f(x) for an odd prime q by expanding
/// x - alpha = gamma^q over the ring of integers. Requires D squarefree
/// 1 mod 4 with class number one (main branch) or D = -8; throws
/// UnsupportedBranch otherwise.
std::vector<Solution> solve_odd_q(const MonicQuadratic& f, unsigned q);

/// D = -3, q = 3: the unit classes {1, w, w^2} each contribute a branch
/// x - alpha = unit * gamma^3. For every |V| <= bound the branch constraint
/// is solved exactly in U, so the result is complete for |V| <= bound.
std::vector<Solution> solve_d3_q3(const MonicQuadratic& f,
                                  const Int& bound = 10000);

/// Exhaustive scan over |x| <= N testing f(x) for an exact q-th power.
std::vector<Solution> brute_force(const MonicQuadratic& f, unsigned q,
                                  const Int& N, bool include_trivial = false);

/// Runs the exponent plan and dispatches each prime to the matching method.
SolutionSet solve_all(const MonicQuadratic& f, const SolveOptions& opts = {});

/// (t, k) with t^k = n and k >= 2 maximal, or nothing. Requires n >= 2.
std::optional<std::pair<Int, unsigned>> perfect_power(const Int& n);

}  // namespace quadpower

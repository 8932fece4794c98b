#pragma once

#include <map>
#include <optional>
#include <vector>

#include "quadpower/quadratic.hpp"

namespace quadpower {

enum class PlanRegime { special_list, class_number };

/// Whether a prime exponent is settled by a provably complete method or
/// only by a bounded search.
enum class PlanTag { provably_complete, bounded_search_only };

/// The finite set of prime exponents that must be checked to solve
/// y^q = f(x) completely, with a completeness tag per prime.
struct ExponentPlan {
    Int disc;
    PlanRegime regime = PlanRegime::special_list;
    std::optional<int> q0;            // exponent bound, when one is stated
    std::optional<Int> h;             // class number (class-number regime)
    std::vector<unsigned> check_set;  // ascending primes
    std::map<unsigned, PlanTag> tags;
    bool lebesgue_no_solutions = false;  // D = -4: no |y| > 1 solutions at all
};

/// Exponent bounds for the unique-factorisation discriminants:
/// {-7: 13, -19: 7, -11: 5, -43: 4, -67: 4, -163: 4}. For D = -3 and -8 no
/// prime exponent above 3 admits solutions.
const std::map<long, int>& q0_table();

/// Builds the plan for f. Supported: the special discriminants
/// {-3, -4, -7, -8, -11, -19, -43, -67, -163}, and any squarefree D < 0
/// (class-number regime, exponents bounded by max{3, P(h)}).
/// Throws UnsupportedDiscriminant otherwise, carrying D.
ExponentPlan exponent_plan(const MonicQuadratic& f);

}  // namespace quadpower

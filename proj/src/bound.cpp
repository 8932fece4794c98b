#include "quadpower/bound.hpp"

#include <algorithm>

#include "quadpower/classnum.hpp"

namespace quadpower {

const std::map<long, int>& q0_table() {
    static const std::map<long, int> table = {
        {-7, 13}, {-19, 7}, {-11, 5}, {-43, 4}, {-67, 4}, {-163, 4},
    };
    return table;
}

namespace {

// Primes that can carry a solution for each special discriminant: 2 plus the
// odd primes q for which u_q = ±1 is attainable in the corresponding ring.
const std::map<long, std::vector<unsigned>>& special_check_sets() {
    static const std::map<long, std::vector<unsigned>> table = {
        {-7, {2, 3, 5, 13}}, {-19, {2, 7}}, {-11, {2, 5}},
        {-43, {2, 3}},       {-67, {2, 3}}, {-163, {2, 3}},
        {-3, {2, 3}},        {-8, {2, 3}},  {-4, {}},
    };
    return table;
}

}  // namespace

ExponentPlan exponent_plan(const MonicQuadratic& f) {
    Int D = f.disc();
    if (D >= 0)
        throw UnsupportedDiscriminant("discriminant " + D.get_str() +
                                      " is not negative");

    ExponentPlan plan;
    plan.disc = D;

    const auto& specials = special_check_sets();
    if (D.fits_slong_p()) {
        auto it = specials.find(D.get_si());
        if (it != specials.end()) {
            plan.regime = PlanRegime::special_list;
            plan.check_set = it->second;
            auto q0 = q0_table().find(D.get_si());
            if (q0 != q0_table().end())
                plan.q0 = q0->second;
            else if (D == -3 || D == -8)
                plan.q0 = 3;
            if (D == -4) plan.lebesgue_no_solutions = true;
            for (unsigned q : plan.check_set) {
                // Everything here is provably complete except q = 3 at
                // D = -3, where the unit-class branches are searched over a
                // bounded (U, V) region.
                bool bounded = (D == -3 && q == 3);
                plan.tags[q] = bounded ? PlanTag::bounded_search_only
                                       : PlanTag::provably_complete;
            }
            return plan;
        }
    }

    if (!is_squarefree(D))
        throw UnsupportedDiscriminant("discriminant " + D.get_str() +
                                      " is neither squarefree nor special");

    // Squarefree D < 0 is 1 mod 4, hence fundamental; outside the special
    // list its class number exceeds one.
    plan.regime = PlanRegime::class_number;
    plan.h = class_number(D);
    std::vector<unsigned> check = {2, 3};
    for (const Int& p : prime_factors(*plan.h)) {
        if (!p.fits_ulong_p())
            throw UnsupportedDiscriminant("class number factor too large for " +
                                          D.get_str());
        check.push_back(static_cast<unsigned>(p.get_ui()));
    }
    std::sort(check.begin(), check.end());
    check.erase(std::unique(check.begin(), check.end()), check.end());
    plan.check_set = check;

    auto gpf = greatest_prime_factor(*plan.h);
    Int q0 = 3;
    if (gpf && *gpf > 3) q0 = *gpf;
    plan.q0 = static_cast<int>(q0.get_si());

    for (unsigned q : plan.check_set)
        plan.tags[q] = q == 2 ? PlanTag::provably_complete
                              : PlanTag::bounded_search_only;
    return plan;
}

}  // namespace quadpower

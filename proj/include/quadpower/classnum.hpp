#pragma once

#include <optional>
#include <vector>

#include "quadpower/intmath.hpp"

namespace quadpower {

/// Reduced binary quadratic form a x^2 + b xy + c y^2 of discriminant
/// b^2 - 4ac < 0, with |b| <= a <= c, a > 0, and b >= 0 when |b| = a or
/// a = c.
struct ReducedForm {
    Int a, b, c;
};

bool is_fundamental_discriminant(const Int& D);

/// All reduced forms of fundamental discriminant D < 0.
/// Throws NotFundamental when D fails the precondition.
std::vector<ReducedForm> reduced_forms(const Int& D);

/// Class number of Q(sqrt(D)) as the count of reduced forms.
Int class_number(const Int& D);

std::optional<Int> greatest_prime_factor(const Int& h);  // none for h = 1
std::vector<Int> prime_factors(const Int& h);            // distinct, ascending

}  // namespace quadpower

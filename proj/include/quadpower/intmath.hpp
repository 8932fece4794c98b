#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "quadpower/errors.hpp"

namespace quadpower {

using Int = mpz_class;

/// Default trial-division cutoff (2^32): factorizations are certified for
/// values whose smallest unfound factor would have to exceed 2^64.
const Int& default_trial_limit();

Int isqrt(const Int& n);
bool is_square(const Int& n);
bool is_square(const Int& n, Int& root);

/// True iff n has an exact integer k-th root; the root is written to `root`.
/// Negative n is allowed for odd k.
bool exact_kth_root(const Int& n, unsigned long k, Int& root);

Int ipow(const Int& base, unsigned long e);
Int binomial(unsigned long n, unsigned long k);

Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);
Int mod_floor(const Int& a, const Int& m);

/// Prime factorization of |n| by trial division, ascending primes.
/// Throws FactoringLimitExceeded when the unfactored cofactor cannot be
/// certified prime within the trial limit.
std::vector<std::pair<Int, unsigned>> factorize(
    const Int& n, const Int& trial_limit = default_trial_limit());

Int smallest_prime_factor(const Int& n,
                          const Int& trial_limit = default_trial_limit());
bool is_prime(const Int& n, const Int& trial_limit = default_trial_limit());

std::vector<Int> positive_divisors(
    const Int& n, const Int& trial_limit = default_trial_limit());

/// n = s^2 * d with d squarefree (d carries the sign of n). Requires n != 0.
std::pair<Int, Int> squarefree_decompose(
    const Int& n, const Int& trial_limit = default_trial_limit());

bool is_squarefree(const Int& n,
                   const Int& trial_limit = default_trial_limit());

}  // namespace quadpower

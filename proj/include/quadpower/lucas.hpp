#pragma once

#include <optional>
#include <vector>

#include "quadpower/intmath.hpp"

namespace quadpower {

/// Lucas pair (alpha, conj(alpha)) = ((P + sqrt(b))/2, (P - sqrt(b))/2),
/// given by trace P and discriminant b = P^2 - 4Q. Admissibility requires
/// b != 0, Q != 0 and gcd(P, Q) = 1; construction rejects anything else.
struct LucasSpec {
    Int trace_p;  // P
    Int disc_b;   // b
    Int norm_q;   // Q = (P^2 - b)/4, derived

    LucasSpec(Int p, Int b);  // throws InvalidLucasPair

    /// alpha/conj(alpha) is a root of unity: iterates cycle and the pair is
    /// not a Lucas pair in the sense of the primitive-divisor theorem.
    bool degenerate() const;
};

/// u_n = (alpha^n - conj(alpha)^n)/(alpha - conj(alpha)) by the recurrence
/// u_0 = 0, u_1 = 1, u_{k+1} = P u_k - Q u_{k-1}.
Int lucas_u(const LucasSpec& spec, unsigned long n);

/// |u_n| with every prime dividing an earlier nonzero term removed; the
/// primes left are exactly the primitive prime divisors of u_n.
Int primitive_part(const LucasSpec& spec, unsigned long n);

struct PrimitiveDivisor {
    bool found = false;
    std::optional<Int> witness;  // smallest primitive prime, when requested
};

/// Primitive prime divisor test for u_n. The boolean needs no factoring;
/// witness extraction trial-divides the primitive part and throws
/// FactoringLimitExceeded when that cannot be completed within the budget.
PrimitiveDivisor has_primitive_prime_divisor(
    const LucasSpec& spec, unsigned long n,
    const Int& trial_limit = default_trial_limit(), bool want_witness = true);

/// One row of the Bilu-Hanrot-Voutier exception table: u_n(alpha, conj(alpha))
/// for the pair of trace p and discriminant b has no primitive prime divisor.
struct BhvEntry {
    int n;
    long p;
    long b;

    friend bool operator==(const BhvEntry& a, const BhvEntry& b) {
        return a.n == b.n && a.p == b.p && a.b == b.b;
    }
    friend bool operator<(const BhvEntry& a, const BhvEntry& b) {
        if (a.n != b.n) return a.n < b.n;
        if (a.p != b.p) return a.p < b.p;
        return a.b < b.b;
    }
};

/// The 19 exception rows for 4 < n <= 30 (n != 6); beyond n = 30 every
/// Lucas number u_n has a primitive prime divisor.
const std::vector<BhvEntry>& bhv_exceptions();

std::vector<BhvEntry> bhv_exceptions(int n);

/// Table rows with b < 0 inside the sweep box |p| <= max_p, |Q| <= max_q,
/// restricted to the given n values. Sorted.
std::vector<BhvEntry> bhv_rows_within(const std::vector<int>& n_values,
                                      long max_p, long max_q);

/// n values a sweep must cover: the primes in (4, n_max] together with the
/// composite table rows (8, 10, 12, 18, 30) up to n_max. n = 6 is outside
/// the theorem and never included.
std::vector<int> bhv_sweep_indices(int n_max);

struct BhvSweepReport {
    long max_p = 0;
    long max_q = 0;
    std::vector<int> n_values;
    long pairs_tested = 0;
    std::vector<BhvEntry> defects;  // canonical p > 0, sorted
};

/// Exhaustively tests every admissible non-degenerate pair with b < 0 in the
/// box against every requested n; defects are the (n, pair) combinations
/// whose u_n has no primitive prime divisor. Pairs (P, b) and (-P, b) are
/// equivalent and reported once with P > 0.
BhvSweepReport verify_bhv_rows(const std::vector<int>& n_values,
                               long max_p, long max_q);
BhvSweepReport verify_bhv_rows(int n_max, long max_p, long max_q);

}  // namespace quadpower

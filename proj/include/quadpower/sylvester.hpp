#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadpower/solver.hpp"

namespace quadpower {

/// Generalised Sylvester sequence of type m: iterates of
/// g_m(x) = x^2 - m x + m from a seed a > m with gcd(a, m) = 1,
/// m not in {0, 4}. Type 1 seed 2 is the Sylvester sequence, type 2 seed 3
/// the Fermat numbers.
struct SylvesterSeq {
    unsigned m = 1;
    Int a;
    std::vector<Int> terms;
};

/// terms[n] = t^k exactly, with k >= 2 maximal.
struct PowerHit {
    std::size_t index;
    Int base;
    unsigned exponent;

    friend bool operator==(const PowerHit& x, const PowerHit& y) {
        return x.index == y.index && x.base == y.base &&
               x.exponent == y.exponent;
    }
};

inline MonicQuadratic sylvester_polynomial(unsigned m) {
    return MonicQuadratic{-Int(m), Int(m)};
}

/// First `count` terms by iteration. Terms roughly square each step; the
/// digit cap aborts runaway generations.
SylvesterSeq generate_sylvester(unsigned m, const Int& a, std::size_t count,
                                std::size_t max_digits = 1000000);

/// Verifies terms[n] = m + (a - m) * terms[0] * ... * terms[n-1] for every
/// generated n, plus pairwise coprimality of the terms.
bool check_mohanty(const SylvesterSeq& seq);

struct ScanCertificate {
    enum class Kind {
        position_theorem,  // m in {1, 2, 3}: the hit positions are certified
        per_term_only,     // other m: each generated term tested directly
    };
    Kind kind = Kind::per_term_only;
    /// Certified for every index, not just the generated ones: no solution
    /// x-value has an integer preimage, so no power can appear past n = 1.
    bool complete_for_all_indices = false;
    /// The q = 3 solution list behind the theorem came from a bounded
    /// search (empty when not applicable).
    Int relied_on_search_bound = 0;
    /// (x-value, preimage) pairs examined for the position argument.
    std::vector<std::pair<Int, std::optional<Int>>> preimage_checks;
    std::string note;
};

struct PowerScan {
    std::vector<PowerHit> hits;
    ScanCertificate certificate;
};

/// All perfect-power terms among the first `count`. For m in {1, 2, 3} the
/// positions are certified: a power can only be the seed itself or the
/// image of a solution x-value of y^q = g_m(x).
PowerScan scan_powers(unsigned m, const Int& a, std::size_t count,
                      const SolveOptions& opts = {});

/// Integer t with g_m(t) = c, largest root, or nothing.
std::optional<Int> preimage_exists(unsigned m, const Int& c);

/// Perfect-power positions in f, f(f(a)), ... (indices n >= 1) for any
/// integer seed, certified through solve_all(f) plus preimage analysis.
PowerScan iterate_general(const MonicQuadratic& f, const Int& a,
                          std::size_t count, const SolveOptions& opts = {},
                          std::size_t max_digits = 1000000);

}  // namespace quadpower

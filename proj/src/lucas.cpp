#include "quadpower/lucas.hpp"

#include <algorithm>
#include <numeric>

namespace quadpower {

LucasSpec::LucasSpec(Int p, Int b) : trace_p(std::move(p)), disc_b(std::move(b)) {
    if (disc_b == 0) throw InvalidLucasPair("LucasSpec: b = 0");
    Int num = trace_p * trace_p - disc_b;
    if (mod_floor(num, 4) != 0)
        throw InvalidLucasPair("LucasSpec: P^2 - b not divisible by 4");
    norm_q = num / 4;
    if (norm_q == 0) throw InvalidLucasPair("LucasSpec: Q = 0");
    if (gcd(trace_p, norm_q) != 1)
        throw InvalidLucasPair("LucasSpec: gcd(P, Q) = " +
                               Int(gcd(trace_p, norm_q)).get_str());
}

bool LucasSpec::degenerate() const {
    if (trace_p == 0) return true;
    Int p2 = trace_p * trace_p;
    return p2 == norm_q || p2 == 2 * norm_q || p2 == 3 * norm_q ||
           p2 == 4 * norm_q;
}

namespace {

// u_0 .. u_n inclusive.
std::vector<Int> lucas_prefix(const LucasSpec& spec, unsigned long n) {
    std::vector<Int> u;
    u.reserve(n + 1);
    u.emplace_back(0);
    if (n >= 1) u.emplace_back(1);
    for (unsigned long k = 2; k <= n; ++k)
        u.push_back(spec.trace_p * u[k - 1] - spec.norm_q * u[k - 2]);
    return u;
}

}  // namespace

Int lucas_u(const LucasSpec& spec, unsigned long n) {
    return lucas_prefix(spec, n).back();
}

Int primitive_part(const LucasSpec& spec, unsigned long n) {
    if (n < 1) throw std::invalid_argument("primitive_part: n < 1");
    auto u = lucas_prefix(spec, n);
    Int r = abs(u[n]);
    if (r <= 1) return r;
    for (unsigned long m = 1; m < n && r > 1; ++m) {
        if (u[m] == 0) continue;
        for (Int g = gcd(r, u[m]); g > 1; g = gcd(r, u[m])) r /= g;
    }
    return r;
}

PrimitiveDivisor has_primitive_prime_divisor(const LucasSpec& spec,
                                             unsigned long n,
                                             const Int& trial_limit,
                                             bool want_witness) {
    Int r = primitive_part(spec, n);
    PrimitiveDivisor out;
    out.found = r > 1;
    if (out.found && want_witness)
        out.witness = smallest_prime_factor(r, trial_limit);
    return out;
}

const std::vector<BhvEntry>& bhv_exceptions() {
    static const std::vector<BhvEntry> table = {
        {5, 1, -7},   {5, 1, -11},  {5, 12, -76}, {5, 12, -1364},
        {7, 1, -19},
        {8, 2, -24},  {8, 1, -7},
        {10, 2, -8},  {10, 5, -3},  {10, 5, -47},
        {12, 1, 5},   {12, 1, -7},  {12, 1, -11}, {12, 2, -56},
        {12, 1, -15}, {12, 1, -19},
        {13, 1, -7},
        {18, 1, -7},
        {30, 1, -7},
    };
    return table;
}

std::vector<BhvEntry> bhv_exceptions(int n) {
    std::vector<BhvEntry> out;
    for (const auto& e : bhv_exceptions())
        if (e.n == n) out.push_back(e);
    return out;
}

std::vector<BhvEntry> bhv_rows_within(const std::vector<int>& n_values,
                                      long max_p, long max_q) {
    std::vector<BhvEntry> out;
    for (const auto& e : bhv_exceptions()) {
        if (e.b >= 0) continue;
        if (std::find(n_values.begin(), n_values.end(), e.n) == n_values.end())
            continue;
        long q4 = e.p * e.p - e.b;  // 4Q
        if (e.p > max_p || q4 > 4 * max_q) continue;
        out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> bhv_sweep_indices(int n_max) {
    std::vector<int> out;
    for (int n = 5; n <= n_max; ++n) {
        bool prime = n >= 2;
        for (int d = 2; d * d <= n && prime; ++d)
            if (n % d == 0) prime = false;
        bool listed_composite =
            n == 8 || n == 10 || n == 12 || n == 18 || n == 30;
        if (prime || listed_composite) out.push_back(n);
    }
    return out;
}

BhvSweepReport verify_bhv_rows(const std::vector<int>& n_values,
                               long max_p, long max_q) {
    BhvSweepReport report;
    report.max_p = max_p;
    report.max_q = max_q;
    report.n_values = n_values;

    // (P, b) ~ (-P, b) gives |u_n(-P)| = |u_n(P)|, and P = 0 is degenerate,
    // so P > 0 suffices.
    for (long p = 1; p <= max_p; ++p) {
        for (long q = -max_q; q <= max_q; ++q) {
            if (q == 0) continue;
            long b = p * p - 4 * q;
            if (b >= 0) continue;
            if (std::gcd(p, q < 0 ? -q : q) != 1) continue;
            LucasSpec spec{Int(p), Int(b)};
            if (spec.degenerate()) continue;
            ++report.pairs_tested;
            for (int n : n_values) {
                if (primitive_part(spec, static_cast<unsigned long>(n)) <= 1)
                    report.defects.push_back({n, p, b});
            }
        }
    }
    std::sort(report.defects.begin(), report.defects.end());
    return report;
}

BhvSweepReport verify_bhv_rows(int n_max, long max_p, long max_q) {
    return verify_bhv_rows(bhv_sweep_indices(n_max), max_p, max_q);
}

}  // namespace quadpower

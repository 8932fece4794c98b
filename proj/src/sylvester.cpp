#include "quadpower/sylvester.hpp"

#include <algorithm>

namespace quadpower {

namespace {

void require_valid_seed(unsigned m, const Int& a) {
    if (m == 0 || m == 4)
        throw InvalidSeed("sylvester: type m = " + std::to_string(m) +
                          " is excluded");
    if (a <= m)
        throw InvalidSeed("sylvester: seed " + a.get_str() +
                          " must exceed the type " + std::to_string(m));
    if (gcd(a, Int(m)) != 1)
        throw InvalidSeed("sylvester: gcd(a, m) = " +
                          Int(gcd(a, Int(m))).get_str());
}

Int next_term(const MonicQuadratic& g, const Int& t, std::size_t max_digits) {
    if (mpz_sizeinbase(t.get_mpz_t(), 10) > max_digits / 2 + 1)
        throw GenerationLimitExceeded("sylvester: term would exceed " +
                                      std::to_string(max_digits) + " digits");
    return g.eval(t);
}

}  // namespace

SylvesterSeq generate_sylvester(unsigned m, const Int& a, std::size_t count,
                                std::size_t max_digits) {
    require_valid_seed(m, a);
    if (count < 1) throw std::invalid_argument("generate_sylvester: count < 1");
    MonicQuadratic g = sylvester_polynomial(m);
    SylvesterSeq seq{m, a, {a}};
    seq.terms.reserve(count);
    while (seq.terms.size() < count)
        seq.terms.push_back(next_term(g, seq.terms.back(), max_digits));
    return seq;
}

bool check_mohanty(const SylvesterSeq& seq) {
    Int prod = 1;
    Int m = seq.m;
    for (const Int& t : seq.terms) {
        if (t != m + (seq.a - m) * prod) return false;
        prod *= t;
    }
    for (std::size_t i = 0; i < seq.terms.size(); ++i)
        for (std::size_t j = i + 1; j < seq.terms.size(); ++j)
            if (gcd(seq.terms[i], seq.terms[j]) != 1) return false;
    return true;
}

namespace {

void scan_seed(const Int& a, std::vector<PowerHit>& hits) {
    if (a < 2) return;
    if (auto p = perfect_power(a)) hits.push_back({0, p->first, p->second});
}

}  // namespace

PowerScan scan_powers(unsigned m, const Int& a, std::size_t count,
                      const SolveOptions& opts) {
    SylvesterSeq seq = generate_sylvester(m, a, count);
    PowerScan scan;
    scan_seed(a, scan.hits);

    if (m == 1 || m == 2 || m == 3) {
        // A term with index n >= 1 equals y^q exactly when its predecessor
        // is an x-value of a solution of y^q = g_m(x).
        SolutionSet sols = solve_all(sylvester_polynomial(m), opts);
        std::vector<Int> xs;
        for (const auto& s : sols.solutions) xs.push_back(s.x);
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

        for (std::size_t n = 1; n < seq.terms.size(); ++n) {
            if (!std::binary_search(xs.begin(), xs.end(), seq.terms[n - 1]))
                continue;
            auto p = perfect_power(seq.terms[n]);
            if (p) scan.hits.push_back({n, p->first, p->second});
        }

        // Beyond the seed, a solution x-value can only recur if it is the
        // image of an integer; when none is, no power appears past n = 1
        // regardless of count.
        auto& cert = scan.certificate;
        cert.kind = ScanCertificate::Kind::position_theorem;
        cert.complete_for_all_indices = true;
        for (const Int& x : xs) {
            if (x < 2) continue;  // terms are >= a >= 2 and increasing
            auto pre = preimage_exists(m, x);
            cert.preimage_checks.emplace_back(x, pre);
            if (pre) cert.complete_for_all_indices = false;
        }
        for (const auto& [q, comp] : sols.completeness)
            if (!comp.provably_complete)
                cert.relied_on_search_bound = comp.bound;
        cert.note = cert.complete_for_all_indices
                        ? "power positions certified for every index"
                        : "power positions verified for the generated terms";
        return scan;
    }

    // No position theorem outside m in {1, 2, 3}: test each term directly.
    for (std::size_t n = 1; n < seq.terms.size(); ++n)
        if (auto p = perfect_power(seq.terms[n]))
            scan.hits.push_back({n, p->first, p->second});
    scan.certificate.kind = ScanCertificate::Kind::per_term_only;
    scan.certificate.note = "terms tested individually; no position theorem";
    return scan;
}

std::optional<Int> preimage_exists(unsigned m, const Int& c) {
    if (m == 0 || m == 4)
        throw InvalidSeed("preimage_exists: type m = " + std::to_string(m));
    auto roots = integer_preimages(sylvester_polynomial(m), c);
    if (roots.empty()) return std::nullopt;
    return *std::max_element(roots.begin(), roots.end());
}

PowerScan iterate_general(const MonicQuadratic& f, const Int& a,
                          std::size_t count, const SolveOptions& opts,
                          std::size_t max_digits) {
    if (f.disc() >= 0)
        throw UnsupportedDiscriminant("iterate_general: discriminant " +
                                      f.disc().get_str());
    SolutionSet sols = solve_all(f, opts);
    std::vector<Int> xs;
    for (const auto& s : sols.solutions) xs.push_back(s.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    PowerScan scan;
    Int t = a;
    for (std::size_t n = 1; n <= count; ++n) {
        Int next = next_term(f, t, max_digits);
        if (std::binary_search(xs.begin(), xs.end(), t))
            if (auto p = perfect_power(next))
                scan.hits.push_back({n, p->first, p->second});
        t = std::move(next);
    }

    // Iterates past the first are positive, so only positive x-values can
    // recur, and only as images of integers.
    auto& cert = scan.certificate;
    cert.kind = ScanCertificate::Kind::position_theorem;
    cert.complete_for_all_indices = true;
    for (const Int& x : xs) {
        if (x < 1) continue;
        auto pre = integer_preimages(f, x);
        cert.preimage_checks.emplace_back(
            x, pre.empty() ? std::nullopt
                           : std::optional<Int>(*std::max_element(
                                 pre.begin(), pre.end())));
        if (!pre.empty()) cert.complete_for_all_indices = false;
    }
    for (const auto& [q, comp] : sols.completeness)
        if (!comp.provably_complete)
            cert.relied_on_search_bound = comp.bound;
    cert.note = cert.complete_for_all_indices
                    ? "power positions certified for every index"
                    : "power positions verified for the generated terms";
    return scan;
}

}  // namespace quadpower

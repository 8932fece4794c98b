#include "quadpower/intmath.hpp"

#include <algorithm>
#include <stdexcept>

namespace quadpower {

const Int& default_trial_limit() {
    static const Int limit = Int(1) << 32;
    return limit;
}

Int isqrt(const Int& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_square(const Int& n, Int& root) {
    if (!is_square(n)) return false;
    root = isqrt(n);
    return true;
}

bool exact_kth_root(const Int& n, unsigned long k, Int& root) {
    if (k == 0) throw std::invalid_argument("exact_kth_root: k = 0");
    if (n < 0 && k % 2 == 0) return false;
    Int r;
    int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    if (!exact) return false;
    root = r;
    return true;
}

Int ipow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

namespace {

unsigned long next_candidate(unsigned long d) {
    if (d == 2) return 3;
    if (d == 3) return 5;
    // 6k±1 wheel
    return d % 6 == 1 ? d + 4 : d + 2;
}

}  // namespace

std::vector<std::pair<Int, unsigned>> factorize(const Int& n,
                                                const Int& trial_limit) {
    if (n == 0) throw std::invalid_argument("factorize: zero argument");
    Int m = abs(n);
    std::vector<std::pair<Int, unsigned>> out;
    if (m == 1) return out;

    unsigned long cap = trial_limit.fits_ulong_p()
                            ? trial_limit.get_ui()
                            : static_cast<unsigned long>(-1);
    unsigned long d = 2;
    Int limit = isqrt(m);
    while (Int(d) <= limit) {
        if (d > cap)
            throw FactoringLimitExceeded(
                "factorize: cofactor " + m.get_str() +
                " exceeds the trial-division budget");
        if (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
                ++e;
            }
            out.emplace_back(Int(d), e);
            limit = isqrt(m);
        } else {
            d = next_candidate(d);
        }
    }
    if (m > 1) out.emplace_back(m, 1);  // remaining cofactor is prime
    return out;
}

Int smallest_prime_factor(const Int& n, const Int& trial_limit) {
    Int m = abs(n);
    if (m < 2) throw std::invalid_argument("smallest_prime_factor: |n| < 2");
    unsigned long cap = trial_limit.fits_ulong_p()
                            ? trial_limit.get_ui()
                            : static_cast<unsigned long>(-1);
    unsigned long d = 2;
    Int limit = isqrt(m);
    while (Int(d) <= limit) {
        if (d > cap)
            throw FactoringLimitExceeded(
                "smallest_prime_factor: " + m.get_str() +
                " exceeds the trial-division budget");
        if (mpz_divisible_ui_p(m.get_mpz_t(), d)) return Int(d);
        d = next_candidate(d);
    }
    return m;  // no divisor up to sqrt(m): prime
}

bool is_prime(const Int& n, const Int& trial_limit) {
    if (n < 2) return false;
    return smallest_prime_factor(n, trial_limit) == n;
}

std::vector<Int> positive_divisors(const Int& n, const Int& trial_limit) {
    auto fac = factorize(n, trial_limit);
    std::vector<Int> divs{1};
    for (const auto& [p, e] : fac) {
        size_t base = divs.size();
        Int pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::pair<Int, Int> squarefree_decompose(const Int& n, const Int& trial_limit) {
    if (n == 0) throw std::invalid_argument("squarefree_decompose: zero");
    Int s = 1, d = n < 0 ? -1 : 1;
    for (const auto& [p, e] : factorize(n, trial_limit)) {
        for (unsigned i = 0; i + 1 < e; i += 2) s *= p;
        if (e % 2) d *= p;
    }
    return {s, d};
}

bool is_squarefree(const Int& n, const Int& trial_limit) {
    return squarefree_decompose(n, trial_limit).first == 1;
}

}  // namespace quadpower

#include "quadpower/poly.hpp"

#include <algorithm>

namespace quadpower {

Int integer_root_bound(const IntPoly& p) {
    const long n = p.degree();
    if (n < 1) return 0;
    Int lead = abs(p.leading());

    Int cauchy_max = 0;
    for (long i = 0; i < n; ++i)
        cauchy_max = std::max(cauchy_max, Int(abs(p.c[i])));
    Int cauchy = 1 + ceil_div(cauchy_max, lead);

    Int fujiwara = 0;
    for (long k = 1; k <= n; ++k) {
        Int ratio = ceil_div(abs(p.c[n - k]), lead);
        if (ratio == 0) continue;
        Int root;
        mpz_root(root.get_mpz_t(), ratio.get_mpz_t(), k);
        fujiwara = std::max(fujiwara, Int(root + 1));
    }
    fujiwara = 2 * fujiwara;

    return std::min(cauchy, fujiwara);
}

namespace {

void push_root(std::vector<Int>& roots, const Int& r) { roots.push_back(r); }

void linear_roots(const IntPoly& p, std::vector<Int>& roots) {
    // c1 x + c0 = 0
    if (p.c[0] % p.c[1] == 0) push_root(roots, -p.c[0] / p.c[1]);
}

void quadratic_roots(const IntPoly& p, std::vector<Int>& roots) {
    const Int &c2 = p.c[2], &c1 = p.c[1], &c0 = p.c[0];
    Int disc = c1 * c1 - 4 * c2 * c0;
    Int s;
    if (!is_square(disc, s)) return;
    for (const Int& num : {Int(-c1 + s), Int(-c1 - s)})
        if (num % (2 * c2) == 0) push_root(roots, num / (2 * c2));
}

// Bisection for the unique zero of p restricted to integers in [lo, hi],
// where p is monotone on the real interval [lo, hi].
void bisect_monotone(const IntPoly& p, Int lo, Int hi,
                     std::vector<Int>& roots) {
    if (lo > hi) return;
    Int flo = p.eval(lo);
    if (flo == 0) push_root(roots, lo);
    Int fhi = p.eval(hi);
    if (fhi == 0) push_root(roots, hi);
    if (sgn(flo) == sgn(fhi)) return;
    while (hi - lo > 1) {
        Int mid = floor_div(lo + hi, 2);
        Int fm = p.eval(mid);
        if (fm == 0) {
            push_root(roots, mid);
            return;
        }
        if (sgn(fm) == sgn(flo)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
}

void cubic_roots(IntPoly p, std::vector<Int>& roots) {
    if (p.c[3] < 0)
        for (auto& c : p.c) c = -c;
    const Int &c3 = p.c[3], &c2 = p.c[2], &c1 = p.c[1];
    Int M = integer_root_bound(p);

    // Critical points of p lie at (-c2 ± sqrt(c2^2 - 3 c3 c1)) / (3 c3);
    // p increases outside them and decreases between.
    Int dd = c2 * c2 - 3 * c3 * c1;
    if (dd <= 0) {
        bisect_monotone(p, -M, M, roots);
        return;
    }
    Int s = isqrt(dd);
    Int den = 3 * c3;
    // A <= t_minus <= A + 2 and B - 2 <= t_plus <= B.
    Int A = floor_div(-c2 - s - 1, den);
    Int B = ceil_div(-c2 + s + 1, den);

    auto clamp = [&](const Int& x) {
        return std::min(std::max(x, Int(-M)), M);
    };
    bisect_monotone(p, -M, clamp(A), roots);
    bisect_monotone(p, clamp(A + 2), clamp(B - 2), roots);
    bisect_monotone(p, clamp(B), M, roots);
    for (const Int& x : {Int(A + 1), Int(B - 1)})
        if (abs(x) <= M && p.eval(x) == 0) push_root(roots, x);
}

void scan_roots(const IntPoly& p, std::vector<Int>& roots) {
    // Any integer root divides the constant term and sits under the bound.
    const Int& c0 = p.c[0];
    Int M = integer_root_bound(p);
    for (Int t = 1; t <= M; ++t) {
        if (c0 % t != 0) continue;
        if (p.eval(t) == 0) push_root(roots, t);
        if (p.eval(-t) == 0) push_root(roots, -t);
    }
}

}  // namespace

std::vector<Int> integer_roots(const IntPoly& p) {
    if (p.is_zero())
        throw std::invalid_argument("integer_roots: zero polynomial");
    std::vector<Int> roots;

    IntPoly q = p;
    size_t shift = 0;
    while (shift < q.c.size() && q.c[shift] == 0) ++shift;
    if (shift > 0) {
        push_root(roots, 0);
        q.c.erase(q.c.begin(), q.c.begin() + static_cast<long>(shift));
    }

    switch (q.degree()) {
        case 0:
            break;
        case 1:
            linear_roots(q, roots);
            break;
        case 2:
            quadratic_roots(q, roots);
            break;
        case 3:
            cubic_roots(q, roots);
            break;
        default:
            scan_roots(q, roots);
            break;
    }

    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace quadpower

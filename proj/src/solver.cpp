#include "quadpower/solver.hpp"

#include <algorithm>

#include "quadpower/classnum.hpp"
#include "quadpower/qint.hpp"

namespace quadpower {

Solution::Solution(const MonicQuadratic& f, Int x_, Int y_, unsigned q_)
    : x(std::move(x_)), y(std::move(y_)), q(q_) {
    if (ipow(y, q) != f.eval(x))
        throw std::logic_error("Solution: y^q != f(x) for x=" + x.get_str() +
                               " y=" + y.get_str() + " q=" + std::to_string(q));
}

namespace {

void sort_unique(std::vector<Solution>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool trivial(const Solution& s) { return abs(s.y) <= 1; }

}  // namespace

std::vector<Solution> solve_q2(const MonicQuadratic& f) {
    Int D = f.disc();
    if (D >= 0)
        throw UnsupportedDiscriminant("solve_q2: discriminant " + D.get_str());
    std::vector<Solution> out;
    Int M = -D;
    // 4y^2 = X^2 - D with X = 2x + a; pair up d e = -D over both signs.
    for (const Int& t : positive_divisors(M)) {
        Int other = M / t;
        for (int sign : {1, -1}) {
            Int d = sign * t, e = sign * other;
            if ((d + e) % 4 != 0) continue;
            if ((e - d) % 2 != 0) continue;
            Int y = (d + e) / 4;
            Int X = (e - d) / 2;
            if ((X - f.a) % 2 != 0) continue;
            out.emplace_back(f, (X - f.a) / 2, y, 2u);
        }
    }
    sort_unique(out);
    return out;
}

IntPoly imag_coeff_poly(unsigned q, const Int& D, const Int& V) {
    if (q < 3 || q % 2 == 0)
        throw std::invalid_argument("imag_coeff_poly: q must be an odd prime");
    std::vector<Int> c(q, 0);
    for (unsigned k = 1; k <= q; k += 2)
        c[q - k] = binomial(q, k) * ipow(V, k) * ipow(D, (k - 1) / 2);
    return IntPoly(std::move(c));
}

Int real_coeff(unsigned q, const Int& D, const Int& U, const Int& V) {
    Int acc = 0;
    for (unsigned k = 0; k <= q; k += 2)
        acc += binomial(q, k) * ipow(U, q - k) * ipow(V, k) * ipow(D, k / 2);
    return acc;
}

namespace {

// Radical-part equation for fixed V, divided through by V:
//   sum over odd k of C(q,k) U^(q-k) V^(k-1) d^((k-1)/2)  =  rhs / V,
// returned as the polynomial whose integer roots are the admissible U.
IntPoly expansion_root_poly(unsigned q, const Int& d, const Int& V,
                            const Int& rhs) {
    std::vector<Int> c(q, 0);
    for (unsigned k = 1; k <= q; k += 2)
        c[q - k] = binomial(q, k) * ipow(V, k - 1) * ipow(d, (k - 1) / 2);
    c[0] -= rhs / V;
    return IntPoly(std::move(c));
}

}  // namespace

std::vector<Solution> solve_odd_q(const MonicQuadratic& f, unsigned q) {
    if (q < 3 || q % 2 == 0 || !is_prime(Int(q)))
        throw std::invalid_argument("solve_odd_q: q must be an odd prime");
    Int D = f.disc();
    std::vector<Solution> out;

    if (D == -8) {
        // gamma = U + V sqrt(-2); the sqrt(-2) part of gamma^q must be -1,
        // so V = ±1.
        for (int vs : {1, -1}) {
            Int V = vs;
            IntPoly p = expansion_root_poly(q, Int(-2), V, Int(-1));
            for (const Int& U : integer_roots(p)) {
                Int x = real_coeff(q, Int(-2), U, V) - f.a / 2;
                Int y = U * U + 2 * V * V;
                out.emplace_back(f, x, y, q);
            }
        }
        sort_unique(out);
        return out;
    }

    if (D >= 0 || mod_floor(D, 4) != 1 || !is_squarefree(D) || D == -3 ||
        class_number(D) != 1)
        throw UnsupportedBranch("solve_odd_q: discriminant " + D.get_str() +
                                " is outside the expansion method");

    // 2^q (x - alpha) = (U + V sqrt(D))^q with gamma = (U + V sqrt(D))/2;
    // the sqrt(D) coefficient must equal -2^(q-1), so V | 2^(q-1).
    Int pow2 = ipow(Int(2), q - 1);
    for (unsigned e = 0; e < q; ++e) {
        for (int vs : {1, -1}) {
            Int V = vs * ipow(Int(2), e);
            IntPoly p = expansion_root_poly(q, D, V, -pow2);
            for (const Int& U : integer_roots(p)) {
                if ((U - V) % 2 != 0) continue;  // ring membership
                Int g1 = real_coeff(q, D, U, V);
                if (g1 % pow2 != 0) continue;
                Int X = g1 / pow2;
                if ((X - f.a) % 2 != 0) continue;
                Int x = (X - f.a) / 2;
                Int y = (U * U - D * V * V) / 4;
                out.emplace_back(f, x, y, q);
            }
        }
    }
    sort_unique(out);
    return out;
}

std::vector<Solution> solve_d3_q3(const MonicQuadratic& f, const Int& bound) {
    Int D = f.disc();
    if (D != -3)
        throw UnsupportedBranch("solve_d3_q3: discriminant " + D.get_str());
    if (bound < 1) throw std::invalid_argument("solve_d3_q3: bound < 1");

    FieldDisc fd = FieldDisc::of(-3);
    std::vector<Solution> out;

    // x - alpha = eps * gamma^3 with eps in {1, w, w^2} and
    // gamma = (U + V sqrt(-3))/2. Writing (U + V sqrt(-3))^3 =
    // g1 + f1 sqrt(-3) with g1 = U^3 - 9UV^2 and f1 = 3U^2 V - 3V^3, and
    // eps = (c + d sqrt(-3))/2, the sqrt(-3) part of 8(x - alpha) forces
    //   c f1 + d g1 = -8,
    // a cubic in U once V is fixed.
    for (const QuadInt& eps : unit_classes(fd, 3).reps) {
        const Int& c = eps.u();
        const Int& d = eps.v();
        for (Int V = -bound; V <= bound; ++V) {
            // c f1 + d g1 + 8 = d U^3 + 3cV U^2 - 9dV^2 U - 3cV^3 + 8
            IntPoly p(std::vector<Int>{-3 * c * V * V * V + 8, -9 * d * V * V,
                                       3 * c * V, d});
            if (p.is_zero()) continue;
            for (const Int& U : integer_roots(p)) {
                if (mod_floor(U - V, 2) != 0) continue;
                QuadInt gamma(U, V, fd);
                if (gamma.is_zero()) continue;
                QuadInt w = eps * pow(gamma, 3);
                if (w.v() != -1) continue;
                if ((w.u() - f.a) % 2 != 0) continue;
                Int x = (w.u() - f.a) / 2;
                Int y = norm(gamma);
                out.emplace_back(f, x, y, 3u);
            }
        }
    }
    sort_unique(out);
    return out;
}

std::vector<Solution> brute_force(const MonicQuadratic& f, unsigned q,
                                  const Int& N, bool include_trivial) {
    if (N < 1) throw std::invalid_argument("brute_force: N < 1");
    if (q < 2) throw std::invalid_argument("brute_force: q < 2");
    std::vector<Solution> out;
    for (Int x = -N; x <= N; ++x) {
        Int t = f.eval(x);
        Int y;
        if (q % 2 == 0) {
            if (t < 0 || !exact_kth_root(t, q, y)) continue;
            out.emplace_back(f, x, y, q);
            if (y != 0) out.emplace_back(f, x, -y, q);
        } else {
            if (!exact_kth_root(t, q, y)) continue;
            out.emplace_back(f, x, y, q);
        }
    }
    if (!include_trivial)
        out.erase(std::remove_if(out.begin(), out.end(), trivial), out.end());
    sort_unique(out);
    return out;
}

SolutionSet solve_all(const MonicQuadratic& f, const SolveOptions& opts) {
    SolutionSet set;
    set.f = f;
    set.plan = exponent_plan(f);
    Int D = set.plan.disc;

    for (unsigned q : set.plan.check_set) {
        std::vector<Solution> sols;
        if (set.plan.tags.at(q) == PlanTag::provably_complete) {
            sols = q == 2 ? solve_q2(f) : solve_odd_q(f, q);
            set.completeness.emplace(q, Completeness::proven());
        } else if (D == -3 && q == 3) {
            sols = solve_d3_q3(f, opts.search_bound);
            set.completeness.emplace(q,
                                     Completeness::up_to(opts.search_bound));
        } else {
            sols = brute_force(f, q, opts.search_bound, opts.include_trivial);
            set.completeness.emplace(q,
                                     Completeness::up_to(opts.search_bound));
        }
        for (auto& s : sols) set.solutions.push_back(std::move(s));
    }

    if (!opts.include_trivial) {
        set.solutions.erase(std::remove_if(set.solutions.begin(),
                                           set.solutions.end(), trivial),
                            set.solutions.end());
    } else {
        // |y| = 1 occurs exactly where f(x) = 1; y = 0 would need a rational
        // root, impossible for D < 0.
        for (const Int& x : integer_preimages(f, Int(1))) {
            for (unsigned q : set.plan.check_set) {
                set.solutions.emplace_back(f, x, Int(1), q);
                if (q % 2 == 0) set.solutions.emplace_back(f, x, Int(-1), q);
            }
        }
    }
    sort_unique(set.solutions);
    return set;
}

std::optional<std::pair<Int, unsigned>> perfect_power(const Int& n) {
    if (n < 2) throw std::invalid_argument("perfect_power: n < 2");
    if (!mpz_perfect_power_p(n.get_mpz_t())) return std::nullopt;
    unsigned long maxk = mpz_sizeinbase(n.get_mpz_t(), 2) - 1;
    for (unsigned long k = maxk; k >= 2; --k) {
        Int root;
        if (exact_kth_root(n, k, root))
            return std::make_pair(root, static_cast<unsigned>(k));
    }
    return std::nullopt;  // unreachable for n >= 4; n in {2, 3} caught above
}

}  // namespace quadpower

#include "quadpower/classnum.hpp"

namespace quadpower {

bool is_fundamental_discriminant(const Int& D) {
    if (D >= 0) return false;
    Int r = mod_floor(D, 4);
    if (r == 1) return is_squarefree(D);
    if (r == 0) {
        Int m = D / 4;
        Int mr = mod_floor(m, 4);
        return (mr == 2 || mr == 3) && is_squarefree(m);
    }
    return false;
}

std::vector<ReducedForm> reduced_forms(const Int& D) {
    if (!is_fundamental_discriminant(D))
        throw NotFundamental(D.get_str() +
                             " is not a negative fundamental discriminant");
    std::vector<ReducedForm> forms;
    Int absD = -D;
    // Reduction forces 3a^2 <= |D|.
    for (Int a = 1; 3 * a * a <= absD; ++a) {
        for (Int b = -a; b <= a; ++b) {
            if (mod_floor(b - D, 2) != 0) continue;
            Int num = b * b - D;
            if (num % (4 * a) != 0) continue;
            Int c = num / (4 * a);
            if (a > c) continue;
            if ((abs(b) == a || a == c) && b < 0) continue;
            forms.push_back({a, b, c});
        }
    }
    return forms;
}

Int class_number(const Int& D) {
    return Int(reduced_forms(D).size());
}

std::optional<Int> greatest_prime_factor(const Int& h) {
    if (h < 1) throw std::invalid_argument("greatest_prime_factor: h < 1");
    if (h == 1) return std::nullopt;
    return factorize(h).back().first;
}

std::vector<Int> prime_factors(const Int& h) {
    if (h < 1) throw std::invalid_argument("prime_factors: h < 1");
    std::vector<Int> out;
    if (h == 1) return out;
    for (const auto& [p, e] : factorize(h)) out.push_back(p);
    return out;
}

}  // namespace quadpower

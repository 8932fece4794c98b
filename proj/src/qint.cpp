#include "quadpower/qint.hpp"

#include <algorithm>

namespace quadpower {

FieldDisc FieldDisc::of(long d) {
    if (d >= 0)
        throw std::invalid_argument("FieldDisc: d must be negative");
    if (!is_squarefree(Int(d)))
        throw std::invalid_argument("FieldDisc: d must be squarefree");
    FieldDisc fd;
    fd.d = d;
    fd.halves_allowed = ((d % 4) + 4) % 4 == 1;
    return fd;
}

QuadInt::QuadInt(Int u, Int v, FieldDisc disc)
    : u_(std::move(u)), v_(std::move(v)), disc_(disc) {
    bool ok = disc_.halves_allowed ? mod_floor(u_ - v_, 2) == 0
                                   : (u_ % 2 == 0 && v_ % 2 == 0);
    if (!ok)
        throw ParityViolation("QuadInt: (" + u_.get_str() + ", " +
                              v_.get_str() + ") is not in the ring of d = " +
                              std::to_string(disc_.d));
}

namespace {
void require_same_disc(const QuadInt& x, const QuadInt& y) {
    if (!(x.disc() == y.disc()))
        throw DiscMismatch("QuadInt: mixed discriminants " +
                           std::to_string(x.disc().d) + " and " +
                           std::to_string(y.disc().d));
}
}  // namespace

QuadInt operator+(const QuadInt& x, const QuadInt& y) {
    require_same_disc(x, y);
    return QuadInt(x.u_ + y.u_, x.v_ + y.v_, x.disc_);
}

QuadInt operator-(const QuadInt& x, const QuadInt& y) {
    require_same_disc(x, y);
    return QuadInt(x.u_ - y.u_, x.v_ - y.v_, x.disc_);
}

QuadInt operator-(const QuadInt& x) {
    return QuadInt(-x.u_, -x.v_, x.disc_);
}

QuadInt operator*(const QuadInt& x, const QuadInt& y) {
    require_same_disc(x, y);
    // (u1 + v1 r)(u2 + v2 r)/4 with r = sqrt(d); both halves are exact by
    // the parity invariant.
    Int u = (x.u_ * y.u_ + Int(x.disc_.d) * x.v_ * y.v_) / 2;
    Int v = (x.u_ * y.v_ + x.v_ * y.u_) / 2;
    return QuadInt(std::move(u), std::move(v), x.disc_);
}

bool operator==(const QuadInt& x, const QuadInt& y) {
    return x.disc_ == y.disc_ && x.u_ == y.u_ && x.v_ == y.v_;
}

QuadInt conj(const QuadInt& x) {
    return QuadInt(x.u_, -x.v_, x.disc_, QuadInt::unchecked_t{});
}

Int norm(const QuadInt& x) {
    return (x.u() * x.u() - Int(x.disc().d) * x.v() * x.v()) / 4;
}

Int trace(const QuadInt& x) { return x.u(); }

QuadInt pow(const QuadInt& x, unsigned long n) {
    QuadInt acc = QuadInt::one(x.disc());
    QuadInt base = x;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return acc;
}

std::vector<QuadInt> units(FieldDisc disc) {
    std::vector<QuadInt> out;
    out.push_back(QuadInt::one(disc));
    out.push_back(-QuadInt::one(disc));
    if (disc.d == -1) {
        out.emplace_back(0, 2, disc);   // i
        out.emplace_back(0, -2, disc);  // -i
    } else if (disc.d == -3) {
        out.emplace_back(-1, 1, disc);   // w = (-1+sqrt(-3))/2
        out.emplace_back(-1, -1, disc);  // w^2
        out.emplace_back(1, -1, disc);   // -w
        out.emplace_back(1, 1, disc);    // -w^2
    }
    return out;
}

UnitClassSet unit_classes(FieldDisc disc, unsigned q) {
    auto us = units(disc);
    std::vector<QuadInt> qth_powers;
    for (const auto& u : us) qth_powers.push_back(pow(u, q));

    UnitClassSet out;
    for (const auto& u : us) {
        bool covered = false;
        for (const auto& rep : out.reps) {
            for (const auto& w : qth_powers) {
                if (rep * w == u) {
                    covered = true;
                    break;
                }
            }
            if (covered) break;
        }
        if (!covered) out.reps.push_back(u);
    }
    return out;
}

}  // namespace quadpower

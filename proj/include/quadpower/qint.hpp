#pragma once

#include <vector>

#include "quadpower/intmath.hpp"

namespace quadpower {

/// Imaginary quadratic field Q(sqrt(d)) for squarefree d < 0. Elements of
/// its ring of integers are (u + v*sqrt(d))/2 with u ≡ v (mod 2) when
/// d ≡ 1 (mod 4), and u, v both even otherwise.
struct FieldDisc {
    long d = -1;
    bool halves_allowed = false;

    static FieldDisc of(long d);

    friend bool operator==(const FieldDisc& a, const FieldDisc& b) {
        return a.d == b.d;
    }
};

/// Quadratic integer (u + v*sqrt(d))/2 in doubled coordinates. One layout
/// serves both ring shapes; the parity invariant guards membership.
class QuadInt {
public:
    QuadInt(Int u, Int v, FieldDisc disc);  // throws ParityViolation

    static QuadInt zero(FieldDisc disc) { return QuadInt(0, 0, disc); }
    static QuadInt one(FieldDisc disc) { return QuadInt(2, 0, disc); }
    static QuadInt integer(const Int& n, FieldDisc disc) {
        return QuadInt(2 * n, 0, disc);
    }

    const Int& u() const { return u_; }
    const Int& v() const { return v_; }
    const FieldDisc& disc() const { return disc_; }
    bool is_zero() const { return u_ == 0 && v_ == 0; }

    friend QuadInt operator+(const QuadInt& x, const QuadInt& y);
    friend QuadInt operator-(const QuadInt& x, const QuadInt& y);
    friend QuadInt operator-(const QuadInt& x);
    friend QuadInt operator*(const QuadInt& x, const QuadInt& y);
    friend bool operator==(const QuadInt& x, const QuadInt& y);
    friend bool operator!=(const QuadInt& x, const QuadInt& y) {
        return !(x == y);
    }

private:
    struct unchecked_t {};
    QuadInt(Int u, Int v, FieldDisc disc, unchecked_t)
        : u_(std::move(u)), v_(std::move(v)), disc_(disc) {}

    Int u_, v_;
    FieldDisc disc_;

    friend QuadInt conj(const QuadInt& x);
};

QuadInt conj(const QuadInt& x);
Int norm(const QuadInt& x);   // x * conj(x) as a rational integer, >= 0
Int trace(const QuadInt& x);  // x + conj(x)
QuadInt pow(const QuadInt& x, unsigned long n);

/// Coset representatives of the unit group modulo q-th powers of units.
struct UnitClassSet {
    std::vector<QuadInt> reps;
};

/// All units of the ring (finite for d < 0): {±1}, plus ±i for d = -1 and
/// the sixth roots of unity for d = -3.
std::vector<QuadInt> units(FieldDisc disc);

UnitClassSet unit_classes(FieldDisc disc, unsigned q);

}  // namespace quadpower

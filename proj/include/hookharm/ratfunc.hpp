#pragma once

#include "hookharm/mpoly.hpp"

namespace hh {

// Quotient of multivariate polynomials over the rationals, kept in canonical
// form: numerator and denominator coprime, denominator an integer-primitive
// polynomial with positive leading coefficient (so a polynomial value always
// has denominator exactly 1).
class RatFunc {
public:
    RatFunc() : num_(MPoly::zero()), den_(MPoly::constant(1)) {}
    RatFunc(const MPoly& p) : num_(p), den_(MPoly::constant(1)) {}
    RatFunc(const Rat& c) : num_(MPoly::constant(c)), den_(MPoly::constant(1)) {}
    RatFunc(long c) : num_(MPoly::constant(Rat(c))), den_(MPoly::constant(1)) {}
    RatFunc(const MPoly& num, const MPoly& den);

    static RatFunc zero() { return RatFunc(); }
    static RatFunc constant(const Rat& c) { return RatFunc(MPoly::constant(c)); }
    static RatFunc var(size_t idx, int pow = 1) { return RatFunc(MPoly::var(idx, pow)); }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    // Requires is_poly(); throws NonPolynomialQuotient otherwise.
    const MPoly& as_poly() const;
    // Requires is_constant(); throws NotInteger otherwise.
    Rat as_rat() const;

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc inv() const;
    RatFunc pow(int k) const;

    // Substitute a rational function for one variable (used for twists such
    // as q -> 1/q).
    RatFunc subst_var(size_t var, const RatFunc& value) const;
    RatFunc eval_var(size_t var, const Rat& value) const;
    Rat eval_all(const std::vector<Rat>& point) const;
    RatFunc swap_vars(size_t i, size_t j) const;

    std::string str(const VarNames& vars) const;

private:
    MPoly num_, den_;
    void normalize();
};

inline RatFunc operator*(const Rat& c, const RatFunc& f) { return RatFunc(c) * f; }

// Substitute a rational function for one variable of a polynomial.
RatFunc subst_poly(const MPoly& p, size_t var, const RatFunc& value);

} // namespace hh

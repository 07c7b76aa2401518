#include "hookharm/ratfunc.hpp"

namespace hh {

RatFunc::RatFunc(const MPoly& num, const MPoly& den) : num_(num), den_(den) { normalize(); }

void RatFunc::normalize() {
    if (den_.is_zero()) fail(err::DivisionByZero, "zero denominator");
    if (num_.is_zero()) {
        den_ = MPoly::constant(1);
        return;
    }
    if (den_.is_constant()) {
        Rat dc = den_.constant_term();
        if (dc != 1) {
            num_ = num_.scaled(Rat(1) / dc);
            den_ = MPoly::constant(1);
        }
        return;
    }
    if (num_.is_constant()) {
        Rat dc = den_.rational_content();
        if (dc != 1) {
            num_ = num_.scaled(Rat(1) / dc);
            den_ = den_.scaled(Rat(1) / dc);
        }
        return;
    }
    MPoly g = mpoly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = mpoly_divexact(num_, g);
        den_ = mpoly_divexact(den_, g);
    }
    Rat dc = den_.rational_content();
    if (dc != 1) {
        den_ = den_.scaled(Rat(1) / dc);
        num_ = num_.scaled(Rat(1) / dc);
    }
}

const MPoly& RatFunc::as_poly() const {
    if (!is_poly()) fail(err::NonPolynomialQuotient, "value is not a polynomial");
    return num_;
}

Rat RatFunc::as_rat() const {
    if (!is_constant()) fail(err::NotInteger, "value is not a constant");
    return num_.constant_term();
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) fail(err::DivisionByZero, "division by zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::inv() const {
    if (is_zero()) fail(err::DivisionByZero, "inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int k) const {
    if (k < 0) return inv().pow(-k);
    RatFunc r(MPoly::constant(1));
    RatFunc base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

RatFunc subst_poly(const MPoly& p, size_t var, const RatFunc& value) {
    // Group terms by exponent of the substituted variable to reuse powers.
    std::map<int, MPoly> by_exp;
    for (const auto& [m, c] : p.terms()) {
        int e = m.exponent(var);
        Mono mm = m;
        if (e > 0) {
            mm.e[var] = 0;
            mm.trim();
        }
        by_exp[e].add_term(mm, c);
    }
    RatFunc total;
    RatFunc power(MPoly::constant(1));
    int cur = 0;
    for (const auto& [e, coeff] : by_exp) {
        while (cur < e) {
            power = power * value;
            ++cur;
        }
        total += RatFunc(coeff) * power;
    }
    return total;
}

RatFunc RatFunc::subst_var(size_t var, const RatFunc& value) const {
    return subst_poly(num_, var, value) / subst_poly(den_, var, value);
}

RatFunc RatFunc::eval_var(size_t var, const Rat& value) const {
    return RatFunc(num_.eval_var(var, value), den_.eval_var(var, value));
}

Rat RatFunc::eval_all(const std::vector<Rat>& point) const {
    Rat d = den_.eval_all(point);
    if (d == 0) fail(err::DivisionByZero, "denominator vanishes at evaluation point");
    return num_.eval_all(point) / d;
}

RatFunc RatFunc::swap_vars(size_t i, size_t j) const {
    return RatFunc(num_.swap_vars(i, j), den_.swap_vars(i, j));
}

std::string RatFunc::str(const VarNames& vars) const {
    if (is_poly()) return num_.str(vars);
    return "(" + num_.str(vars) + ")/(" + den_.str(vars) + ")";
}

} // namespace hh

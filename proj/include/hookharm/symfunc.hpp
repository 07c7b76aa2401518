#pragma once

#include <functional>
#include <map>

#include "hookharm/partitions.hpp"
#include "hookharm/ratfunc.hpp"

namespace hh {

// Classical bases: monomial, elementary, homogeneous, power sum, Schur,
// forgotten (= omega of monomial).
enum class Basis : char { m = 'm', e = 'e', h = 'h', p = 'p', s = 's', f = 'f' };

Basis basis_from_char(char c);

// Symmetric function with rational-function coefficients, stored as a sparse
// coefficient map in one named basis.  Conversions route through the power
// sum basis; inhomogeneous values are allowed.
class SymFunc {
public:
    using Coef = std::map<Partition, RatFunc>;

    SymFunc() = default;
    explicit SymFunc(Basis b) : basis_(b) {}

    static SymFunc zero(Basis b = Basis::s) { return SymFunc(b); }
    static SymFunc one(Basis b = Basis::s);
    static SymFunc elem(Basis b, const Partition& lam);

    Basis basis() const { return basis_; }
    const Coef& coef() const { return coef_; }
    bool is_zero() const { return coef_.empty(); }
    size_t n_terms() const { return coef_.size(); }

    void add_term(const Partition& lam, const RatFunc& c);

    SymFunc to_basis(Basis b) const;
    RatFunc coeff_in(Basis b, const Partition& lam) const;

    SymFunc operator+(const SymFunc& o) const;
    SymFunc operator-(const SymFunc& o) const;
    SymFunc operator-() const;
    SymFunc operator*(const SymFunc& o) const;
    SymFunc& operator+=(const SymFunc& o) { return *this = *this + o; }
    SymFunc& operator-=(const SymFunc& o) { return *this = *this - o; }
    bool operator==(const SymFunc& o) const;
    bool operator!=(const SymFunc& o) const { return !(*this == o); }

    SymFunc scaled(const RatFunc& c) const;

    int max_degree() const; // -1 for zero
    bool is_homogeneous() const;
    SymFunc component(int d) const;
    // Keep only Schur terms with at most L rows (expands into the Schur
    // basis first).
    SymFunc length_at_most(int L) const;

    SymFunc omega() const;
    RatFunc hall(const SymFunc& g) const;
    // Adjoint of multiplication by g under the Hall pairing, applied to this.
    SymFunc skew_by(const SymFunc& g) const;

    // Alphabet transforms, all defined through power sums:
    //   pleth_scale:     p_k -> c(k) * p_k
    //   pleth_eval:      p_k -> v(k), collapsing to a scalar
    //   pleth_shift_one: p_k -> 1 + p_k
    SymFunc pleth_scale(const std::function<RatFunc(int)>& c) const;
    RatFunc pleth_eval(const std::function<RatFunc(int)>& v) const;
    SymFunc pleth_shift_one() const;

    std::string str(const VarNames& vars) const;

private:
    Basis basis_ = Basis::s;
    Coef coef_;
};

SymFunc operator*(const RatFunc& c, const SymFunc& f);

inline SymFunc sf_s(const Partition& lam) { return SymFunc::elem(Basis::s, lam); }
inline SymFunc sf_m(const Partition& lam) { return SymFunc::elem(Basis::m, lam); }
inline SymFunc sf_e(const Partition& lam) { return SymFunc::elem(Basis::e, lam); }
inline SymFunc sf_h(const Partition& lam) { return SymFunc::elem(Basis::h, lam); }
inline SymFunc sf_p(const Partition& lam) { return SymFunc::elem(Basis::p, lam); }

// Irreducible character value indexed by shape and cycle type.
long char_value(const Partition& lam, const Partition& mu);

// Schur polynomial in k variables (variable indices 0..k-1).
MPoly schur_poly(const Partition& lam, int k);

// Expand a symmetric polynomial in k variables into Schur polynomials;
// throws NotSymmetric when the input is not a symmetric polynomial in
// exactly those variables.
std::map<Partition, Rat> glk_schur_expand(const MPoly& g, int k);

} // namespace hh

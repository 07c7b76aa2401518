#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hookharm/rational.hpp"

namespace hh {

// Monomial = exponent vector over a fixed global variable enumeration.
// Trailing zero exponents are trimmed, so the same monomial compares equal
// regardless of how wide a context it was built in.
struct Mono {
    std::vector<uint16_t> e;

    void trim();
    int deg() const;
    int exponent(size_t var) const { return var < e.size() ? e[var] : 0; }
    bool is_one() const { return e.empty(); }
    bool divides(const Mono& m) const;

    static Mono one() { return Mono{}; }
    static Mono var(size_t idx, int pow = 1);

    Mono operator*(const Mono& o) const;
    Mono operator/(const Mono& o) const; // exact; throws if not divisible
    Mono pow(int k) const;

    bool operator==(const Mono& o) const { return e == o.e; }
};

// Graded lexicographic order: higher total degree wins, ties broken by the
// first differing exponent (larger exponent on the earlier variable wins).
int mono_cmp(const Mono& a, const Mono& b);

struct MonoGrlexGreater {
    bool operator()(const Mono& a, const Mono& b) const { return mono_cmp(a, b) > 0; }
};

// Variable names for rendering and parsing; index = global variable id.
struct VarNames {
    std::vector<std::string> names;

    const std::string& name(size_t i) const;
    int index_of(const std::string& s) const; // -1 if unknown

    static VarNames qt();                     // {q, t}
    static VarNames single(const std::string& s);
    static VarNames glk(int k);               // {q1..qk}
};

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept in descending graded-lex order, so begin() is the leading
// term and zero coefficients are never stored.
class MPoly {
public:
    using TermMap = std::map<Mono, Rat, MonoGrlexGreater>;

    MPoly() = default;
    explicit MPoly(const Rat& c);

    static MPoly zero() { return MPoly(); }
    static MPoly constant(const Rat& c) { return MPoly(c); }
    static MPoly var(size_t idx, int pow = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    int total_deg() const; // -1 for zero
    int deg_in(size_t var) const;
    size_t n_terms() const { return terms_.size(); }
    size_t top_var() const; // largest variable index present; 0 if constant

    const TermMap& terms() const { return terms_; }
    const Mono& lead_mono() const;
    const Rat& lead_coeff() const;
    Rat coeff(const Mono& m) const;
    Rat constant_term() const { return coeff(Mono::one()); }

    void add_term(const Mono& m, const Rat& c);

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator-() const;
    MPoly operator*(const MPoly& o) const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }

    MPoly scaled(const Rat& c) const;
    MPoly mul_mono(const Mono& m, const Rat& c) const;
    MPoly pow(int k) const;

    MPoly derive(size_t var, int order = 1) const;

    // Partial evaluation var := value (a rational), other variables kept.
    MPoly eval_var(size_t var, const Rat& value) const;
    // Full evaluation; `point` must cover every variable that appears.
    Rat eval_all(const std::vector<Rat>& point) const;
    // Exchange two variables (used by symmetry checks).
    MPoly swap_vars(size_t i, size_t j) const;
    // Substitute var := q^k * (another monomial) style map; general remap of
    // each variable to a monomial times coefficient is enough for our uses.
    MPoly subst_mono(size_t var, const Mono& m, const Rat& c) const;

    // c * p where c makes p primitive integral with positive leading
    // coefficient; returns the removed content (never zero for p != 0).
    Rat rational_content() const;
    MPoly primitive_part() const;

    std::string str(const VarNames& vars) const;
    static MPoly parse(const std::string& s, const VarNames& vars);

private:
    TermMap terms_;
};

MPoly operator*(const Rat& c, const MPoly& p);

// Exact division; throws NonPolynomialQuotient when the division is not
// exact (callers only use it where exactness is guaranteed).
MPoly mpoly_divexact(const MPoly& a, const MPoly& b);

// GCD, normalized to a primitive integral polynomial with positive leading
// coefficient (returns 1 for two zero inputs to keep callers simple).
MPoly mpoly_gcd(const MPoly& a, const MPoly& b);

} // namespace hh

#pragma once

#include <map>

#include "hookharm/symfunc.hpp"

namespace hh {

// Variable-free bookkeeping for sums c_{lam,mu} s_lam (x) s_mu, keeping the
// GL side (lam, q-variables) apart from the S_n side (mu, z-variables).
// Multiplicities are exact integers; negative values are allowed so that
// differences of characters can be inspected, and is_nonneg screens them.
class TensorSF {
public:
    // inner shape -> outer shape -> multiplicity, zero entries never stored
    using Coef = std::map<Partition, std::map<Partition, long>>;

    TensorSF() = default;

    const Coef& coef() const { return by_inner_; }
    bool is_zero() const { return by_inner_.empty(); }
    size_t n_terms() const;

    // Inner shapes must all have one size; throws SizeMismatch otherwise.
    void add_term(const Partition& outer, const Partition& inner, long mult);

    // Stored multiplicity, 0 when absent.
    long mult(const Partition& outer, const Partition& inner) const;

    // Common size of the inner shapes, -1 when empty.
    int inner_size() const;

    TensorSF operator+(const TensorSF& o) const;
    TensorSF operator-(const TensorSF& o) const;
    bool operator==(const TensorSF& o) const { return by_inner_ == o.by_inner_; }
    bool operator!=(const TensorSF& o) const { return !(*this == o); }

    bool is_nonneg() const;

    // Keep the entries whose outer shape has at most k rows.
    TensorSF length_restrict(int k) const;

    // Sum of mult * s_outer over one inner shape; zero when absent.
    SymFunc tensor_coeff(const Partition& inner) const;

    // Replace every outer shape by its Schur polynomial in variables
    // 0..k-1; outer shapes with more than k rows vanish.
    SymFunc eval_glk(int k) const;

    std::string str() const;

private:
    Coef by_inner_;
};

// Expand the Schur coefficients of f, polynomials in variables 0..k-1, into
// GL_k characters.  Throws NonPolynomialQuotient on a rational coefficient,
// NotSymmetric when a coefficient is not symmetric in those variables, and
// NotInteger when a multiplicity is not an integer.
TensorSF to_tensor(const SymFunc& f, int k);

} // namespace hh

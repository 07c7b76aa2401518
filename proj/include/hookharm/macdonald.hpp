#pragma once

#include <map>

#include "hookharm/symfunc.hpp"

namespace hh {

// Everything here lives over Q(q, t) with the global variables 0 = q, 1 = t.

// Deformed Hall pairing: <p_lam, p_mu> = delta_{lam,mu} * z_lam *
// prod_i (1 - q^{lam_i}) / (1 - t^{lam_i}).
RatFunc hall_qt(const SymFunc& f, const SymFunc& g);

// Monic Macdonald polynomial P_mu (monomial basis leading term m_mu),
// obtained by orthogonalizing the monomial basis against hall_qt along a
// linear extension of dominance.
SymFunc macdonald_p(const Partition& mu);

// Integral form J_mu = prod over cells (1 - q^{arm} t^{leg+1}) * P_mu.
SymFunc macdonald_j(const Partition& mu);

// Modified Macdonald polynomial: J_mu with p_k scaled by 1/(1 - t^k), then
// t -> 1/t and the result multiplied by t^{n(mu)}.  Schur coefficients are
// polynomials in q, t with nonnegative integer coefficients; cached.
SymFunc macdonald_htilde(const Partition& mu);

// Eigenvalues attached to a shape: t_stat = q^{n(mu')} t^{n(mu)}; b_stat =
// sum over cells of q^{col} t^{row} (the origin cell contributes 1).
RatFunc t_stat(const Partition& mu);
RatFunc b_stat(const Partition& mu);

// Coordinates of a homogeneous f on the modified Macdonald basis of its
// degree (exact linear solve).  Throws ContextMismatch for inhomogeneous
// input and SingularBasis if the solve breaks down.
std::map<Partition, RatFunc> htilde_coords(const SymFunc& f);

// Macdonald eigenoperators, extended linearly across homogeneous components:
//   nabla:          Htilde_mu -> t_stat(mu) Htilde_mu
//   delta_e(k):     Htilde_mu -> e_k[b_stat(mu)] Htilde_mu
//   delta_e_prime:  Htilde_mu -> e_k[b_stat(mu) - 1] Htilde_mu
SymFunc nabla(const SymFunc& f);
SymFunc delta_e(int k, const SymFunc& f);
SymFunc delta_e_prime(int k, const SymFunc& f);

// shat_(a|b) = (-1/(qt))^a * s_{(a+1, 1^b)}.
SymFunc shat_hook(const Hook& rho);

// Dual Hall-Littlewood series in the single variable q (variable 0):
// H_mu = sum_lambda K_{lambda' mu'}(q) s_lambda with charge Kostka-Foulkes
// coefficients.
SymFunc hl_H(const Partition& mu);

// Common part and complement of the modified Macdonald pair ((n), (n-1,1)):
// I = (q^{n-1} Htilde_{(n-1,1)} - t Htilde_{(n)}) / (q^{n-1} - t), which is
// conjectured (and here checked) to be a polynomial, and
// I_perp = Htilde_{(n-1,1)} - I.  Throws NonPolynomialQuotient if the
// division is not exact.
struct ScienceFiction {
    SymFunc I;
    SymFunc I_perp;
};
ScienceFiction science_fiction(int n);

// Dimension of the S_n module with Frobenius characteristic f at the given
// specialization point (q, t) = (1, 1): sum of coefficients against the
// number of standard tableaux of each shape.  Throws NotInteger if a
// coefficient fails to specialize to an integer.
Rat frob_dimension(const SymFunc& f);

// Number of standard Young tableaux of the given shape.
long syt_count(const Partition& lam);

} // namespace hh

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hookharm/mpoly.hpp"
#include "hookharm/partitions.hpp"
#include "hookharm/symfunc.hpp"
#include "hookharm/tensor.hpp"

namespace hh {

// k rows of n polynomial variables arranged as a matrix; the variable in row
// r and column i has global MPoly index r*n + i.  Row 0 is the alphabet x,
// row 1 the alphabet y, and so on.
struct VarMatrix {
    int k = 0;
    int n = 0;

    VarMatrix(int rows, int cols);
    size_t var(int row, int col) const;
};

// Element of the polynomial ring extended by inert theta variables, stored
// as the theta-free part comps[0] plus one polynomial coefficient comps[i]
// for each theta_i.  Inert means the theta_i carry no degree and are never
// differentiated; operators act on the comps componentwise.
struct ThetaPoly {
    std::vector<MPoly> comps;

    ThetaPoly() = default;
    explicit ThetaPoly(int n) : comps(static_cast<size_t>(n) + 1) {}

    int n_thetas() const { return static_cast<int>(comps.size()) - 1; }
    bool is_zero() const;
    ThetaPoly scaled(const Rat& c) const;
    ThetaPoly operator+(const ThetaPoly& o) const;
    ThetaPoly operator-(const ThetaPoly& o) const;
    bool operator==(const ThetaPoly& o) const { return comps == o.comps; }
    bool operator!=(const ThetaPoly& o) const { return !(*this == o); }
};

// theta_1*m_1 + ... + theta_n*m_n where m_i is the signed minor of the
// Vandermonde-like matrix with columns [theta, x^0, ..., x^{n-1}] in which
// the column x^a is omitted; requires a + b + 1 = n.
ThetaPoly hook_det(int n, int a, int b, const VarMatrix& vm);

// A diagram is a finite set of cells (k, l); the cell contributes the column
// of entries x_i^k y_i^l to a determinant.
using Diagram = std::vector<std::pair<int, int>>;

// Cells (k, l) with 0 <= l < len(mu) and 0 <= k < mu[l] (French convention:
// row l of the shape lies at height l).
Diagram ferrers_diagram(const Partition& mu);

// Cells {(i, 0) : 0 <= i <= a + b, i != a} plus (0, 1); substituting
// theta_i for y_i in its determinant recovers hook_det(a + b + 1, a, b).
Diagram hook_diagram(int a, int b);

// det(x_i^k y_i^l) over rows i = 1..n and the cells of d, with the columns
// ordered so that (k', l') comes before (k, l) when l' > l, or l' = l and
// k' < k; the order fixes the sign.
MPoly diagram_det(const Diagram& d, int n);

// Partial derivative in the row-r, column-i variable applied componentwise.
ThetaPoly derive(const ThetaPoly& f, int row, int col, const VarMatrix& vm);

// Polarization sum_i v_i * d^r/du_i^r moving degree from row u to row v;
// requires distinct rows inside the matrix and order r >= 1.
ThetaPoly polarize(const ThetaPoly& f, int u, int v, int r, const VarMatrix& vm);

// Column permutation i -> perm[i] applied to every variable row and to the
// theta components simultaneously.
ThetaPoly sn_act(const ThetaPoly& f, const std::vector<int>& perm, const VarMatrix& vm);

// Row degree vector (degree in row 0 variables, ..., row k-1 variables);
// every component and term must agree, otherwise the element does not live
// in a single graded piece.
std::vector<int> multidegree(const ThetaPoly& f, const VarMatrix& vm);

// Position of a term inside a ThetaPoly: component index plus monomial.
// Ordered with smaller component first and larger monomial (graded-lex)
// first within a component, so the minimum is the leading term.
struct TermKey {
    int comp = 0;
    Mono mono;

    bool operator<(const TermKey& o) const;
    bool operator==(const TermKey& o) const { return comp == o.comp && mono == o.mono; }
};

// Reduced row-echelon basis of one multihomogeneous graded piece.  Rows are
// kept with unit leading coefficient, sorted by pivot, and every pivot term
// is eliminated from all other rows, so the basis of a span is canonical
// and coordinates can be read off at the pivots.
struct Slice {
    std::vector<ThetaPoly> rows;
    std::vector<TermKey> pivots;

    // Reduces v against the rows and adjoins the residual when it is
    // nonzero; returns whether the slice grew.
    bool insert(ThetaPoly v);
    // Coordinates of a member in the row basis; fails with ContextMismatch
    // when v is not in the span.
    std::vector<Rat> coordinates(const ThetaPoly& v) const;
    bool contains(const ThetaPoly& v) const;
    bool operator==(const Slice& o) const { return rows == o.rows; }
};

// Multigraded basis of an operator-closed module, one echelonized slice per
// multidegree, together with the generators it was grown from.
struct GradedBasis {
    VarMatrix vm;
    std::map<std::vector<int>, Slice> slices;
    std::vector<ThetaPoly> gens;
    // Set when a polarization of order r >= 2 produced a basis element that
    // the order-1 operators had not already reached.
    bool higher_polarization_used = false;

    explicit GradedBasis(const VarMatrix& m) : vm(m) {}
    long dimension() const;
    std::map<std::vector<int>, long> hilbert() const;
};

// Smallest space containing the generators that is closed under every row
// derivation and, when polarize_max >= 1, every polarization of order
// r <= polarize_max between distinct rows.  Saturation is breadth-first
// with derivations applied before polarizations and rows in index order.
GradedBasis closure(const std::vector<ThetaPoly>& gens, const VarMatrix& vm, int polarize_max);

// Graded Frobenius characteristic: Schur-basis symmetric function whose
// coefficients are polynomials in variables 0..k-1, variable r recording
// the degree in row r.  Multiplicities come from exact character traces of
// the column permutations on each slice; fails with NotSnStable when the
// span is not permutation-invariant or a multiplicity is not a nonnegative
// integer.
SymFunc graded_frobenius(const GradedBasis& gb);

// Same data repackaged with the polynomial coefficients expanded into
// Schur polynomials in the k row-degree variables.
TensorSF frobenius(const GradedBasis& gb);

// Closure of hook_det(n, a, b) in k variable rows under all derivations
// and polarizations of order r <= n-1 (a single row admits no polarization
// pair, leaving the derivation closure).
GradedBasis module_M(int n, int a, int b, int k);

// Frobenius of the quotient by the next module in the hook chain, i.e.
// frobenius(M_(a|b)) - frobenius(M_(a+1|b-1)), the quotient by zero when
// b = 0; fails with NegativeMultiplicity if the difference is not a true
// quotient character.
TensorSF s_rho(int n, int a, int b, int k);

// Derivation closure (rows x and y, no polarizations) of diagram_det.
GradedBasis diagram_module(const Diagram& d);

// Bigraded Frobenius of diagram_module(d) with q recording x-degree and t
// recording y-degree.  The two gradings are not interchangeable, so the
// result is a Schur-basis symmetric function over polynomials in q and t.
SymFunc garsia_haiman(const Diagram& d);

// Slicewise intersection of two module bases over the same variable matrix.
GradedBasis intersect(const GradedBasis& A, const GradedBasis& B);

} // namespace hh

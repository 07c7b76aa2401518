#pragma once

#include <vector>

#include "hookharm/symfunc.hpp"

namespace hh {

// A Dyck path of order n, identified with the partition of full cells above
// it: gamma is weakly decreasing, padded with zeros to length n, and bounded
// row by row by the staircase (n-1, n-2, ..., 0).
struct DyckPath {
    Partition gamma;
    int n = 0;

    DyckPath() = default;
    // Pads with zeros to length n; throws BadPartition if the entries are
    // not weakly decreasing nonnegative, OutOfRange if the staircase bound
    // fails or the input is longer than n.
    DyckPath(Partition g, int n);

    bool operator==(const DyckPath& o) const { return n == o.n && gamma == o.gamma; }
    bool operator!=(const DyckPath& o) const { return !(*this == o); }
    bool operator<(const DyckPath& o) const {
        return n != o.n ? n < o.n : gamma < o.gamma;
    }

    std::string str() const;
};

// All Dyck paths of order n (Catalan(n) of them), in descending
// lexicographic order of gamma, so the staircase comes first and the zero
// path last.
std::vector<DyckPath> dyck_paths(int n);

// Number of cells between the path and the diagonal: sum over rows of
// (n - i - gamma_i), rows indexed from 0.
int area(const DyckPath& p);

// The staircase minus a ones placed just before the last entry; the unique
// subpath of itself with area exactly a.  Throws OutOfRange unless
// 0 <= a <= n-1.
DyckPath big_gamma(int n, int a);

// Vertical-strip LLT polynomial of the path in the Schur basis, statistic
// carried by the given variable: over all fillings w of the n strip cells
// (read bottom to top, entries 1..n, increasing up each strip column),
// weight var^{dinv(w)} where dinv counts pairs of cells on the same
// diagonal with increasing entries plus pairs on adjacent diagonals with
// decreasing entries.
SymFunc llt(const DyckPath& p, size_t var = 0);

// Sum of t^{area(gamma) - a} * llt(gamma, q) over the subpaths gamma of
// big_gamma(n, a).  Containment keeps every exponent nonnegative; a
// violation would throw NegativeExponent rather than be silently dropped.
SymFunc shuffle_rhs(int n, int a);

// Covering relation of the Tamari order: rotate a down step past the
// primitive subpath that follows it, which moves the path up (gamma shrinks
// pointwise, area grows).  The staircase is the minimum and the zero path
// the maximum.
std::vector<DyckPath> tamari_covers(const DyckPath& p);

// All paths of order n together with the adjacency of the covering
// relation: covers[i] lists the indices of the paths covering paths[i].
struct TamariRelation {
    int n = 0;
    std::vector<DyckPath> paths;
    std::vector<std::vector<size_t>> covers;

    // Index of p in paths; throws OutOfRange if absent.
    size_t index_of(const DyckPath& p) const;
};

TamariRelation tamari(int n);

// Length of the longest strict chain from a up to b in the Tamari order.
// Throws SizeMismatch if the orders differ and NotComparable unless a <= b.
int chain_d(const DyckPath& a, const DyckPath& b);

// Double sum of q^{chain_d(alpha, beta)} * llt(beta, t) over Tamari pairs
// big_gamma(n, a) <= alpha <= beta.  Defined for a in {0, 1, n-1}; throws
// OutOfRange otherwise.
SymFunc trivariate_rhs(int n, int a);

} // namespace hh

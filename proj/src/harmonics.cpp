#include "hookharm/harmonics.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <string>
#include <utility>

#include "hookharm/errors.hpp"

namespace hh {

VarMatrix::VarMatrix(int rows, int cols) : k(rows), n(cols) {
    if (rows < 1) fail(err::BadRow, "variable matrix needs at least one row");
    if (cols < 1) fail(err::OutOfRange, "variable matrix needs at least one column");
}

size_t VarMatrix::var(int row, int col) const {
    if (row < 0 || row >= k) fail(err::BadRow, "row " + std::to_string(row) + " outside the variable matrix");
    if (col < 0 || col >= n) fail(err::OutOfRange, "column " + std::to_string(col) + " outside the variable matrix");
    return static_cast<size_t>(row) * static_cast<size_t>(n) + static_cast<size_t>(col);
}

bool ThetaPoly::is_zero() const {
    for (const MPoly& p : comps)
        if (!p.is_zero()) return false;
    return true;
}

ThetaPoly ThetaPoly::scaled(const Rat& c) const {
    ThetaPoly out(n_thetas());
    for (size_t j = 0; j < comps.size(); ++j) out.comps[j] = comps[j].scaled(c);
    return out;
}

ThetaPoly ThetaPoly::operator+(const ThetaPoly& o) const {
    if (comps.size() != o.comps.size())
        fail(err::SizeMismatch, "theta polynomials have different component counts");
    ThetaPoly out(n_thetas());
    for (size_t j = 0; j < comps.size(); ++j) out.comps[j] = comps[j] + o.comps[j];
    return out;
}

ThetaPoly ThetaPoly::operator-(const ThetaPoly& o) const {
    if (comps.size() != o.comps.size())
        fail(err::SizeMismatch, "theta polynomials have different component counts");
    ThetaPoly out(n_thetas());
    for (size_t j = 0; j < comps.size(); ++j) out.comps[j] = comps[j] - o.comps[j];
    return out;
}

namespace {

// Leibniz expansion of a size x size determinant whose (row, col) entry is
// the monomial produced by `entry`; small sizes only.
MPoly leibniz_det(int size, const std::function<Mono(int, int)>& entry) {
    if (size == 0) return MPoly(Rat(1));
    std::vector<int> perm(static_cast<size_t>(size));
    std::iota(perm.begin(), perm.end(), 0);
    MPoly out;
    do {
        int inv = 0;
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inv;
        Mono m = Mono::one();
        for (int i = 0; i < size; ++i) m = m * entry(i, perm[static_cast<size_t>(i)]);
        out.add_term(m, inv % 2 == 0 ? Rat(1) : Rat(-1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

bool tp_lead(const ThetaPoly& f, TermKey& out) {
    for (size_t c = 0; c < f.comps.size(); ++c)
        if (!f.comps[c].is_zero()) {
            out = TermKey{static_cast<int>(c), f.comps[c].lead_mono()};
            return true;
        }
    return false;
}

Rat tp_coeff(const ThetaPoly& f, const TermKey& key) {
    if (key.comp < 0 || key.comp >= static_cast<int>(f.comps.size())) return Rat(0);
    return f.comps[static_cast<size_t>(key.comp)].coeff(key.mono);
}

// f -= c * g
void tp_submul(ThetaPoly& f, const Rat& c, const ThetaPoly& g) {
    for (size_t j = 0; j < g.comps.size(); ++j)
        if (!g.comps[j].is_zero()) f.comps[j] -= g.comps[j].scaled(c);
}

} // namespace

ThetaPoly hook_det(int n, int a, int b, const VarMatrix& vm) {
    if (n < 1 || a < 0 || b < 0 || a + b + 1 != n)
        fail(err::BadHook, "hook (" + std::to_string(a) + "|" + std::to_string(b) +
                               ") does not have size " + std::to_string(n));
    if (vm.n != n) fail(err::ContextMismatch, "variable matrix has a different column count");
    std::vector<int> powers;
    for (int c = 0; c < n; ++c)
        if (c != a) powers.push_back(c);
    ThetaPoly out(n);
    for (int i = 0; i < n; ++i) {
        std::vector<int> rows;
        for (int r = 0; r < n; ++r)
            if (r != i) rows.push_back(r);
        MPoly minor = leibniz_det(n - 1, [&](int rr, int cc) {
            return Mono::var(vm.var(0, rows[static_cast<size_t>(rr)]), powers[static_cast<size_t>(cc)]);
        });
        out.comps[static_cast<size_t>(i) + 1] = i % 2 == 0 ? minor : -minor;
    }
    return out;
}

Diagram ferrers_diagram(const Partition& mu) {
    check_partition(mu);
    Diagram d;
    for (size_t row = 0; row < mu.size(); ++row)
        for (int col = 0; col < mu[row]; ++col) d.emplace_back(col, static_cast<int>(row));
    return d;
}

Diagram hook_diagram(int a, int b) {
    if (a < 0 || b < 0) fail(err::BadHook, "hook coordinates must be nonnegative");
    Diagram d;
    d.emplace_back(0, 1);
    for (int i = 0; i <= a + b; ++i)
        if (i != a) d.emplace_back(i, 0);
    return d;
}

MPoly diagram_det(const Diagram& d, int n) {
    if (static_cast<int>(d.size()) != n)
        fail(err::SizeMismatch, "diagram has " + std::to_string(d.size()) + " cells, expected " +
                                    std::to_string(n));
    if (n < 1) fail(err::OutOfRange, "diagram must have at least one cell");
    for (const auto& [col, row] : d)
        if (col < 0 || row < 0) fail(err::OutOfRange, "diagram cells must have nonnegative coordinates");
    Diagram cells = d;
    std::sort(cells.begin(), cells.end(), [](const std::pair<int, int>& p, const std::pair<int, int>& q) {
        if (p.second != q.second) return p.second > q.second;
        return p.first < q.first;
    });
    return leibniz_det(n, [&](int i, int c) {
        const auto& [xk, yl] = cells[static_cast<size_t>(c)];
        Mono m = Mono::var(static_cast<size_t>(i), xk);
        return m * Mono::var(static_cast<size_t>(n + i), yl);
    });
}

ThetaPoly derive(const ThetaPoly& f, int row, int col, const VarMatrix& vm) {
    size_t v = vm.var(row, col);
    ThetaPoly out(f.n_thetas());
    for (size_t j = 0; j < f.comps.size(); ++j) out.comps[j] = f.comps[j].derive(v);
    return out;
}

ThetaPoly polarize(const ThetaPoly& f, int u, int v, int r, const VarMatrix& vm) {
    if (u == v) fail(err::BadRow, "polarization needs two distinct rows");
    if (r < 1) fail(err::OutOfRange, "polarization order must be positive");
    vm.var(u, 0);
    vm.var(v, 0);
    ThetaPoly out(f.n_thetas());
    for (int i = 0; i < vm.n; ++i) {
        Mono vi = Mono::var(vm.var(v, i));
        for (size_t j = 0; j < f.comps.size(); ++j) {
            MPoly dj = f.comps[j].derive(vm.var(u, i), r);
            if (!dj.is_zero()) out.comps[j] += dj.mul_mono(vi, Rat(1));
        }
    }
    return out;
}

ThetaPoly sn_act(const ThetaPoly& f, const std::vector<int>& perm, const VarMatrix& vm) {
    size_t n = static_cast<size_t>(vm.n);
    if (perm.size() != n) fail(err::SizeMismatch, "permutation length differs from the column count");
    std::vector<bool> hit(n, false);
    for (int p : perm) {
        if (p < 0 || p >= vm.n || hit[static_cast<size_t>(p)])
            fail(err::OutOfRange, "column permutation is not a bijection");
        hit[static_cast<size_t>(p)] = true;
    }
    if (f.comps.size() != n + 1)
        fail(err::SizeMismatch, "theta polynomial has a different component count");
    size_t width = static_cast<size_t>(vm.k) * n;
    auto subst = [&](const MPoly& p) {
        MPoly q;
        for (const auto& [m, c] : p.terms()) {
            std::vector<uint16_t> e(width, 0);
            for (size_t vidx = 0; vidx < m.e.size(); ++vidx) {
                if (m.e[vidx] == 0) continue;
                if (vidx >= width) fail(err::ContextMismatch, "variable outside the matrix");
                size_t r = vidx / n;
                size_t i = vidx % n;
                e[r * n + static_cast<size_t>(perm[i])] = m.e[vidx];
            }
            Mono mm{std::move(e)};
            mm.trim();
            q.add_term(mm, c);
        }
        return q;
    };
    ThetaPoly out(vm.n);
    out.comps[0] = subst(f.comps[0]);
    for (size_t i = 0; i < n; ++i)
        out.comps[static_cast<size_t>(perm[i]) + 1] = subst(f.comps[i + 1]);
    return out;
}

std::vector<int> multidegree(const ThetaPoly& f, const VarMatrix& vm) {
    size_t width = static_cast<size_t>(vm.k) * static_cast<size_t>(vm.n);
    std::vector<int> d;
    bool seen = false;
    for (const MPoly& comp : f.comps) {
        for (const auto& [m, c] : comp.terms()) {
            std::vector<int> cur(static_cast<size_t>(vm.k), 0);
            for (size_t vidx = 0; vidx < m.e.size(); ++vidx) {
                if (m.e[vidx] == 0) continue;
                if (vidx >= width) fail(err::ContextMismatch, "variable outside the matrix");
                cur[vidx / static_cast<size_t>(vm.n)] += m.e[vidx];
            }
            if (!seen) {
                d = cur;
                seen = true;
            } else if (cur != d) {
                fail(err::ContextMismatch, "element is not multihomogeneous");
            }
        }
    }
    if (!seen) fail(err::ContextMismatch, "zero element has no multidegree");
    return d;
}

bool TermKey::operator<(const TermKey& o) const {
    if (comp != o.comp) return comp < o.comp;
    return mono_cmp(mono, o.mono) > 0;
}

bool Slice::insert(ThetaPoly v) {
    // Rows are inter-reduced, so no elimination step can reintroduce another
    // pivot; the coefficient read at each pivot is already final.
    for (size_t j = 0; j < rows.size(); ++j) {
        Rat c = tp_coeff(v, pivots[j]);
        if (c != 0) tp_submul(v, c, rows[j]);
    }
    TermKey lead;
    if (!tp_lead(v, lead)) return false;
    Rat lc = tp_coeff(v, lead);
    v = v.scaled(Rat(1) / lc);
    for (size_t j = 0; j < rows.size(); ++j) {
        Rat c = tp_coeff(rows[j], lead);
        if (c != 0) tp_submul(rows[j], c, v);
    }
    auto pos = std::lower_bound(pivots.begin(), pivots.end(), lead);
    size_t idx = static_cast<size_t>(pos - pivots.begin());
    pivots.insert(pos, lead);
    rows.insert(rows.begin() + static_cast<long>(idx), std::move(v));
    return true;
}

std::vector<Rat> Slice::coordinates(const ThetaPoly& v) const {
    std::vector<Rat> coords(rows.size());
    ThetaPoly rem = v;
    for (size_t j = 0; j < rows.size(); ++j) {
        coords[j] = tp_coeff(rem, pivots[j]);
        if (coords[j] != 0) tp_submul(rem, coords[j], rows[j]);
    }
    if (!rem.is_zero()) fail(err::ContextMismatch, "element lies outside the slice span");
    return coords;
}

bool Slice::contains(const ThetaPoly& v) const {
    ThetaPoly rem = v;
    for (size_t j = 0; j < rows.size(); ++j) {
        Rat c = tp_coeff(rem, pivots[j]);
        if (c != 0) tp_submul(rem, c, rows[j]);
    }
    return rem.is_zero();
}

long GradedBasis::dimension() const {
    long total = 0;
    for (const auto& [d, s] : slices) total += static_cast<long>(s.rows.size());
    return total;
}

std::map<std::vector<int>, long> GradedBasis::hilbert() const {
    std::map<std::vector<int>, long> h;
    for (const auto& [d, s] : slices)
        if (!s.rows.empty()) h[d] = static_cast<long>(s.rows.size());
    return h;
}

GradedBasis closure(const std::vector<ThetaPoly>& gens, const VarMatrix& vm, int polarize_max) {
    if (polarize_max < 0) fail(err::OutOfRange, "polarization bound must be nonnegative");
    GradedBasis gb(vm);
    std::deque<std::pair<std::vector<int>, ThetaPoly>> work;
    auto feed = [&](ThetaPoly f) -> bool {
        if (f.is_zero()) return false;
        if (f.n_thetas() != vm.n)
            fail(err::SizeMismatch, "generator has " + std::to_string(f.n_thetas()) +
                                        " theta components, expected " + std::to_string(vm.n));
        std::vector<int> d = multidegree(f, vm);
        if (!gb.slices[d].insert(f)) return false;
        work.emplace_back(std::move(d), std::move(f));
        return true;
    };
    for (const ThetaPoly& g : gens) {
        if (g.is_zero()) continue;
        gb.gens.push_back(g);
        feed(g);
    }
    while (!work.empty()) {
        auto [d, f] = std::move(work.front());
        work.pop_front();
        for (int r = 0; r < vm.k; ++r) {
            if (d[static_cast<size_t>(r)] == 0) continue;
            for (int i = 0; i < vm.n; ++i) feed(derive(f, r, i, vm));
        }
        if (polarize_max < 1) continue;
        for (int u = 0; u < vm.k; ++u)
            for (int v = 0; v < vm.k; ++v) {
                if (v == u) continue;
                for (int r = 1; r <= polarize_max && r <= d[static_cast<size_t>(u)]; ++r)
                    if (feed(polarize(f, u, v, r, vm)) && r >= 2) gb.higher_polarization_used = true;
            }
    }
    return gb;
}

namespace {

std::vector<int> cycle_type_perm(const Partition& mu, int n) {
    std::vector<int> perm(static_cast<size_t>(n));
    int at = 0;
    for (int part : mu) {
        for (int j = 0; j < part; ++j)
            perm[static_cast<size_t>(at + j)] = j + 1 < part ? at + j + 1 : at;
        at += part;
    }
    return perm;
}

bool is_identity(const std::vector<int>& perm) {
    for (size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != static_cast<int>(i)) return false;
    return true;
}

} // namespace

SymFunc graded_frobenius(const GradedBasis& gb) {
    const VarMatrix& vm = gb.vm;
    int n = vm.n;
    // The operator set is permutation-equivariant, so invariance of the
    // whole span follows from the generators landing back inside it; the
    // adjacent transpositions generate the full column permutation group.
    for (const ThetaPoly& g : gb.gens)
        for (int j = 0; j + 1 < n; ++j) {
            std::vector<int> tau(static_cast<size_t>(n));
            std::iota(tau.begin(), tau.end(), 0);
            std::swap(tau[static_cast<size_t>(j)], tau[static_cast<size_t>(j) + 1]);
            ThetaPoly img = sn_act(g, tau, vm);
            auto it = gb.slices.find(multidegree(img, vm));
            if (it == gb.slices.end() || !it->second.contains(img))
                fail(err::NotSnStable, "module is not stable under column permutations");
        }
    std::vector<Partition> mus = partitions_of(n);
    std::vector<std::vector<int>> reps;
    std::vector<Rat> zs;
    reps.reserve(mus.size());
    for (const Partition& mu : mus) {
        reps.push_back(cycle_type_perm(mu, n));
        zs.emplace_back(z_of(mu));
    }
    std::vector<Partition> lams = partitions_of(n);
    std::map<Partition, MPoly> coefs;
    for (const auto& [d, slice] : gb.slices) {
        if (slice.rows.empty()) continue;
        std::vector<Rat> tr(mus.size());
        for (size_t m = 0; m < mus.size(); ++m) {
            if (is_identity(reps[m])) {
                tr[m] = Rat(static_cast<long>(slice.rows.size()));
                continue;
            }
            Rat t(0);
            for (size_t i = 0; i < slice.rows.size(); ++i)
                t += tp_coeff(sn_act(slice.rows[i], reps[m], vm), slice.pivots[i]);
            tr[m] = t;
        }
        std::vector<uint16_t> e(d.size());
        for (size_t r = 0; r < d.size(); ++r) e[r] = static_cast<uint16_t>(d[r]);
        Mono qd{std::move(e)};
        qd.trim();
        for (const Partition& lam : lams) {
            Rat mult(0);
            for (size_t m = 0; m < mus.size(); ++m)
                mult += tr[m] * Rat(char_value(lam, mus[m])) / zs[m];
            if (mult == 0) continue;
            if (!rat_is_integer(mult) || mult < 0)
                fail(err::NotSnStable, "trace decomposition gives a non-integral or negative multiplicity");
            coefs[lam].add_term(qd, mult);
        }
    }
    SymFunc out(Basis::s);
    for (const auto& [lam, c] : coefs)
        if (!c.is_zero()) out.add_term(lam, RatFunc(c));
    return out;
}

TensorSF frobenius(const GradedBasis& gb) { return to_tensor(graded_frobenius(gb), gb.vm.k); }

GradedBasis module_M(int n, int a, int b, int k) {
    if (k < 1) fail(err::OutOfRange, "row count k must be positive");
    VarMatrix vm(k, n);
    ThetaPoly gen = hook_det(n, a, b, vm);
    return closure({gen}, vm, k >= 2 ? n - 1 : 0);
}

TensorSF s_rho(int n, int a, int b, int k) {
    TensorSF top = frobenius(module_M(n, a, b, k));
    if (b > 0) top = top - frobenius(module_M(n, a + 1, b - 1, k));
    if (!top.is_nonneg())
        fail(err::NegativeMultiplicity, "hook chain difference has a negative multiplicity");
    return top;
}

GradedBasis diagram_module(const Diagram& d) {
    int n = static_cast<int>(d.size());
    if (n < 1) fail(err::OutOfRange, "diagram must have at least one cell");
    VarMatrix vm(2, n);
    ThetaPoly gen(n);
    gen.comps[0] = diagram_det(d, n);
    return closure({gen}, vm, 0);
}

SymFunc garsia_haiman(const Diagram& d) { return graded_frobenius(diagram_module(d)); }

GradedBasis intersect(const GradedBasis& A, const GradedBasis& B) {
    if (A.vm.k != B.vm.k || A.vm.n != B.vm.n)
        fail(err::ContextMismatch, "modules live over different variable matrices");
    GradedBasis out(A.vm);
    for (const auto& [d, sa] : A.slices) {
        auto bt = B.slices.find(d);
        if (bt == B.slices.end() || sa.rows.empty() || bt->second.rows.empty()) continue;
        const Slice& sb = bt->second;
        // Zassenhaus: echelonize rows (u | u) for u in A and (v | 0) for v
        // in B by their left half; rows whose left half dies carry an
        // element of the intersection in the right half.
        std::vector<std::pair<ThetaPoly, ThetaPoly>> ech;
        std::map<TermKey, size_t> lead_of;
        Slice inter;
        auto put = [&](ThetaPoly l, ThetaPoly r) {
            TermKey lead;
            while (tp_lead(l, lead)) {
                auto it = lead_of.find(lead);
                if (it == lead_of.end()) {
                    lead_of.emplace(lead, ech.size());
                    ech.emplace_back(std::move(l), std::move(r));
                    return;
                }
                const auto& [el, er] = ech[it->second];
                Rat c = tp_coeff(l, lead) / tp_coeff(el, lead);
                tp_submul(l, c, el);
                tp_submul(r, c, er);
            }
            if (!r.is_zero()) inter.insert(std::move(r));
        };
        for (const ThetaPoly& u : sa.rows) put(u, u);
        for (const ThetaPoly& v : sb.rows) put(v, ThetaPoly(v.n_thetas()));
        if (!inter.rows.empty()) out.slices.emplace(d, std::move(inter));
    }
    for (const auto& [d, s] : out.slices)
        for (const ThetaPoly& row : s.rows) out.gens.push_back(row);
    return out;
}

} // namespace hh

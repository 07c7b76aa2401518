#include "hookharm/macdonald.hpp"

#include <mutex>
#include <vector>

#include "hookharm/errors.hpp"

namespace hh {

namespace {

constexpr size_t VQ = 0;
constexpr size_t VT = 1;

RatFunc one_minus_pow(size_t var, int k) {
    return RatFunc(MPoly::constant(1) - MPoly::var(var, k));
}

std::mutex table_mutex;
std::map<Partition, SymFunc> p_table;       // monomial basis
std::map<Partition, RatFunc> p_norm_table;  // hall_qt(P, P)
std::map<Partition, SymFunc> htilde_table;  // Schur basis

RatFunc hall_qt_p(const SymFunc& fp, const SymFunc& gp) {
    RatFunc acc;
    for (const auto& [lam, cf] : fp.coef()) {
        auto it = gp.coef().find(lam);
        if (it == gp.coef().end()) continue;
        RatFunc w(Rat(z_of(lam)));
        for (int part : lam) w *= one_minus_pow(VQ, part) / one_minus_pow(VT, part);
        acc += cf * it->second * w;
    }
    return acc;
}

// Fills p_table / p_norm_table for all shapes of size n.  Must be called
// with table_mutex held.
void build_p_rec(int n) {
    std::vector<Partition> shapes = partitions_of(n);
    if (p_table.count(shapes.back())) return;
    // Walk dominance-ascending (reverse of the listed order) so that each
    // m_mu is orthogonalized against the already-built smaller shapes.
    for (auto it = shapes.rbegin(); it != shapes.rend(); ++it) {
        const Partition& mu = *it;
        SymFunc p = sf_m(mu).to_basis(Basis::p);
        for (auto jt = shapes.rbegin(); jt != it; ++jt) {
            const SymFunc& prev = p_table.at(*jt);
            RatFunc proj = hall_qt_p(p, prev) / p_norm_table.at(*jt);
            if (!proj.is_zero()) p -= prev.scaled(proj);
        }
        p_norm_table[mu] = hall_qt_p(p, p);
        if (p_norm_table[mu].is_zero()) fail(err::SingularBasis, "degenerate pairing norm");
        p_table[mu] = p;
    }
}

RatFunc cell_product(const Partition& mu) {
    RatFunc prod(Rat(1));
    for (const auto& [r, c] : cells(mu)) {
        MPoly qa = MPoly::var(VQ, arm(mu, r, c));
        MPoly tl = MPoly::var(VT, leg(mu, r, c) + 1);
        prod *= RatFunc(MPoly::constant(1) - qa * tl);
    }
    return prod;
}

SymFunc htilde_build(const Partition& mu) {
    SymFunc j = macdonald_j(mu);
    SymFunc h = j.pleth_scale([](int k) { return one_minus_pow(VT, k).inv(); });
    SymFunc hs = h.to_basis(Basis::s);
    RatFunc tn = RatFunc::var(VT, n_stat(mu));
    SymFunc out(Basis::s);
    RatFunc tinv = RatFunc::var(VT).inv();
    for (const auto& [lam, c] : hs.coef()) {
        RatFunc twisted = c.subst_var(VT, tinv) * tn;
        if (!twisted.is_zero()) out.add_term(lam, twisted);
    }
    for (const auto& [lam, c] : out.coef()) {
        if (!c.is_poly()) fail(err::NonPolynomialQuotient, "modified Macdonald coefficient at " + partition_str(lam));
    }
    return out;
}

// Exact solve of basis * x = rhs where the basis matrix columns are the
// Schur coefficient vectors of Htilde_mu, mu |- d.  Fraction-free forward
// elimination over MPoly, then rational back substitution.
std::map<Partition, RatFunc> solve_on_htilde(const SymFunc& f, int d) {
    std::vector<Partition> shapes = partitions_of(d);
    size_t m = shapes.size();
    std::vector<SymFunc> basis(m);
    for (size_t j = 0; j < m; ++j) basis[j] = macdonald_htilde(shapes[j]);

    SymFunc fs = f.to_basis(Basis::s);
    MPoly den = MPoly::constant(1);
    for (const auto& [lam, c] : fs.coef()) {
        MPoly g = mpoly_gcd(den, c.den());
        den = mpoly_divexact(den * c.den(), g);
    }

    std::vector<std::vector<MPoly>> a(m, std::vector<MPoly>(m + 1));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j) a[i][j] = basis[j].coeff_in(Basis::s, shapes[i]).as_poly();
        RatFunc rhs = fs.coeff_in(Basis::s, shapes[i]) * RatFunc(den);
        a[i][m] = rhs.as_poly();
    }

    MPoly prev = MPoly::constant(1);
    for (size_t k = 0; k < m; ++k) {
        size_t piv = k;
        while (piv < m && a[piv][k].is_zero()) ++piv;
        if (piv == m) fail(err::SingularBasis, "modified Macdonald basis solve");
        if (piv != k) std::swap(a[piv], a[k]);
        for (size_t i = k + 1; i < m; ++i) {
            for (size_t j = k + 1; j <= m; ++j)
                a[i][j] = mpoly_divexact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
            a[i][k] = MPoly::zero();
        }
        prev = a[k][k];
    }

    std::vector<RatFunc> x(m);
    for (size_t ii = m; ii-- > 0;) {
        RatFunc acc(a[ii][m]);
        for (size_t j = ii + 1; j < m; ++j) acc -= RatFunc(a[ii][j]) * x[j];
        x[ii] = acc / RatFunc(a[ii][ii]);
    }

    std::map<Partition, RatFunc> out;
    RatFunc dinv = RatFunc(den).inv();
    for (size_t j = 0; j < m; ++j) {
        RatFunc c = x[j] * dinv;
        if (!c.is_zero()) out[shapes[j]] = c;
    }
    return out;
}

SymFunc apply_eigen(const SymFunc& f, const std::function<RatFunc(const Partition&)>& eigen) {
    SymFunc out(Basis::s);
    int top = f.max_degree();
    for (int d = 0; d <= top; ++d) {
        SymFunc comp = f.component(d).to_basis(Basis::s);
        if (comp.is_zero()) continue;
        if (d == 0) {
            out += comp.scaled(eigen(Partition{}));
            continue;
        }
        for (const auto& [mu, c] : solve_on_htilde(comp, d)) {
            RatFunc w = c * eigen(mu);
            if (!w.is_zero()) out += macdonald_htilde(mu).scaled(w);
        }
    }
    return out;
}

} // namespace

RatFunc hall_qt(const SymFunc& f, const SymFunc& g) {
    return hall_qt_p(f.to_basis(Basis::p), g.to_basis(Basis::p));
}

SymFunc macdonald_p(const Partition& mu) {
    check_partition(mu);
    std::lock_guard<std::mutex> lock(table_mutex);
    build_p_rec(partition_size(mu));
    return p_table.at(mu).to_basis(Basis::m);
}

SymFunc macdonald_j(const Partition& mu) {
    return macdonald_p(mu).scaled(cell_product(mu));
}

SymFunc macdonald_htilde(const Partition& mu) {
    check_partition(mu);
    {
        std::lock_guard<std::mutex> lock(table_mutex);
        auto it = htilde_table.find(mu);
        if (it != htilde_table.end()) return it->second;
    }
    SymFunc h = htilde_build(mu);
    std::lock_guard<std::mutex> lock(table_mutex);
    return htilde_table.emplace(mu, std::move(h)).first->second;
}

RatFunc t_stat(const Partition& mu) {
    return RatFunc(MPoly::var(VQ, n_stat(conjugate(mu))) * MPoly::var(VT, n_stat(mu)));
}

RatFunc b_stat(const Partition& mu) {
    MPoly acc;
    for (const auto& [r, c] : cells(mu)) acc += MPoly::var(VQ, c) * MPoly::var(VT, r);
    return RatFunc(acc);
}

std::map<Partition, RatFunc> htilde_coords(const SymFunc& f) {
    if (f.is_zero()) return {};
    if (!f.is_homogeneous()) fail(err::ContextMismatch, "htilde_coords needs a homogeneous input");
    int d = f.max_degree();
    if (d == 0) return {{Partition{}, f.coeff_in(Basis::s, Partition{})}};
    return solve_on_htilde(f.to_basis(Basis::s), d);
}

SymFunc nabla(const SymFunc& f) {
    return apply_eigen(f, [](const Partition& mu) { return t_stat(mu); });
}

namespace {

RatFunc elementary_of_cells(const Partition& mu, int k, bool drop_origin) {
    std::vector<MPoly> mons;
    for (const auto& [r, c] : cells(mu)) {
        if (drop_origin && r == 0 && c == 0) continue;
        mons.push_back(MPoly::var(VQ, c) * MPoly::var(VT, r));
    }
    if (k < 0 || k > static_cast<int>(mons.size())) return RatFunc::zero();
    std::vector<MPoly> e(k + 1);
    e[0] = MPoly::constant(1);
    for (size_t i = 0; i < mons.size(); ++i)
        for (int j = std::min<int>(k, static_cast<int>(i) + 1); j >= 1; --j) e[j] += mons[i] * e[j - 1];
    return RatFunc(e[k]);
}

} // namespace

SymFunc delta_e(int k, const SymFunc& f) {
    if (k < 0) fail(err::OutOfRange, "delta_e needs k >= 0");
    return apply_eigen(f, [k](const Partition& mu) { return elementary_of_cells(mu, k, false); });
}

SymFunc delta_e_prime(int k, const SymFunc& f) {
    if (k < 0) fail(err::OutOfRange, "delta_e_prime needs k >= 0");
    return apply_eigen(f, [k](const Partition& mu) { return elementary_of_cells(mu, k, true); });
}

SymFunc shat_hook(const Hook& rho) {
    SymFunc out(Basis::s);
    Rat sign = (rho.arm % 2 == 0) ? 1 : -1;
    MPoly qt = MPoly::var(VQ, rho.arm) * MPoly::var(VT, rho.arm);
    out.add_term(rho.shape(), RatFunc(MPoly::constant(sign), qt));
    return out;
}

SymFunc hl_H(const Partition& mu) {
    check_partition(mu);
    Partition muc = conjugate(mu);
    SymFunc out(Basis::s);
    for (const Partition& lam : partitions_of(partition_size(mu))) {
        MPoly k = kostka_foulkes(conjugate(lam), muc);
        if (!k.is_zero()) out.add_term(lam, RatFunc(k));
    }
    return out;
}

ScienceFiction science_fiction(int n) {
    if (n < 2) fail(err::OutOfRange, "science_fiction needs n >= 2");
    Partition row(1, n);
    Partition hookshape = {n - 1, 1};
    SymFunc top = macdonald_htilde(row);
    SymFunc mid = macdonald_htilde(hookshape);
    MPoly div = MPoly::var(VQ, n - 1) - MPoly::var(VT);
    RatFunc qpow = RatFunc::var(VQ, n - 1);
    RatFunc t = RatFunc::var(VT);
    ScienceFiction out;
    out.I = SymFunc(Basis::s);
    for (const Partition& lam : partitions_of(n)) {
        RatFunc numer = qpow * mid.coeff_in(Basis::s, lam) - t * top.coeff_in(Basis::s, lam);
        if (numer.is_zero()) continue;
        out.I.add_term(lam, RatFunc(mpoly_divexact(numer.as_poly(), div)));
    }
    out.I_perp = mid - out.I;
    return out;
}

long syt_count(const Partition& lam) {
    long n = partition_size(lam);
    long fact = 1;
    for (long i = 2; i <= n; ++i) fact *= i;
    long hooks = 1;
    for (const auto& [r, c] : cells(lam)) hooks *= arm(lam, r, c) + leg(lam, r, c) + 1;
    return fact / hooks;
}

Rat frob_dimension(const SymFunc& f) {
    SymFunc fs = f.to_basis(Basis::s);
    Rat dim = 0;
    std::vector<Rat> ones = {Rat(1), Rat(1)};
    for (const auto& [lam, c] : fs.coef()) dim += c.eval_all(ones) * Rat(syt_count(lam));
    return dim;
}

} // namespace hh

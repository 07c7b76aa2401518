#include "hookharm/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hh {

void Mono::trim() {
    while (!e.empty() && e.back() == 0) e.pop_back();
}

int Mono::deg() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
}

bool Mono::divides(const Mono& m) const {
    if (e.size() > m.e.size()) return false;
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > m.e[i]) return false;
    return true;
}

Mono Mono::var(size_t idx, int pow) {
    Mono m;
    if (pow < 0) fail(err::NegativeExponent, "monomial exponent < 0");
    if (pow == 0) return m;
    m.e.assign(idx + 1, 0);
    m.e[idx] = static_cast<uint16_t>(pow);
    return m;
}

Mono Mono::operator*(const Mono& o) const {
    Mono r;
    r.e.resize(std::max(e.size(), o.e.size()), 0);
    for (size_t i = 0; i < e.size(); ++i) r.e[i] += e[i];
    for (size_t i = 0; i < o.e.size(); ++i) r.e[i] += o.e[i];
    return r;
}

Mono Mono::operator/(const Mono& o) const {
    if (!o.divides(*this)) fail(err::NegativeExponent, "monomial division not exact");
    Mono r = *this;
    for (size_t i = 0; i < o.e.size(); ++i) r.e[i] -= o.e[i];
    r.trim();
    return r;
}

Mono Mono::pow(int k) const {
    if (k < 0) fail(err::NegativeExponent, "monomial power < 0");
    Mono r;
    r.e.resize(e.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = static_cast<uint16_t>(e[i] * k);
    r.trim();
    return r;
}

int mono_cmp(const Mono& a, const Mono& b) {
    int da = a.deg(), db = b.deg();
    if (da != db) return da < db ? -1 : 1;
    size_t n = std::max(a.e.size(), b.e.size());
    for (size_t i = 0; i < n; ++i) {
        int xa = a.exponent(i), xb = b.exponent(i);
        if (xa != xb) return xa < xb ? -1 : 1;
    }
    return 0;
}

const std::string& VarNames::name(size_t i) const {
    if (i >= names.size()) fail(err::OutOfRange, "variable index out of range");
    return names[i];
}

int VarNames::index_of(const std::string& s) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == s) return static_cast<int>(i);
    return -1;
}

VarNames VarNames::qt() { return VarNames{{"q", "t"}}; }

VarNames VarNames::single(const std::string& s) { return VarNames{{s}}; }

VarNames VarNames::glk(int k) {
    VarNames v;
    for (int i = 1; i <= k; ++i) v.names.push_back("q" + std::to_string(i));
    return v;
}

MPoly::MPoly(const Rat& c) {
    if (c != 0) terms_[Mono::one()] = c;
}

MPoly MPoly::var(size_t idx, int pow) {
    MPoly p;
    p.terms_[Mono::var(idx, pow)] = 1;
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool MPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second == 1;
}

int MPoly::total_deg() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.deg();
}

int MPoly::deg_in(size_t var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(var));
    return d;
}

size_t MPoly::top_var() const {
    size_t v = 0;
    for (const auto& [m, c] : terms_) v = std::max(v, m.e.size());
    return v == 0 ? 0 : v - 1;
}

const Mono& MPoly::lead_mono() const {
    if (terms_.empty()) fail(err::OutOfRange, "leading monomial of zero");
    return terms_.begin()->first;
}

const Rat& MPoly::lead_coeff() const {
    if (terms_.empty()) fail(err::OutOfRange, "leading coefficient of zero");
    return terms_.begin()->second;
}

Rat MPoly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void MPoly::add_term(const Mono& m, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    r += o;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    r -= o;
    return r;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MPoly MPoly::operator-() const {
    MPoly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

MPoly MPoly::scaled(const Rat& c) const {
    MPoly r;
    if (c == 0) return r;
    for (const auto& [m, x] : terms_) r.terms_[m] = x * c;
    return r;
}

MPoly MPoly::mul_mono(const Mono& m, const Rat& c) const {
    MPoly r;
    if (c == 0) return r;
    for (const auto& [mm, x] : terms_) r.terms_[mm * m] = x * c;
    return r;
}

MPoly MPoly::pow(int k) const {
    if (k < 0) fail(err::NegativeExponent, "polynomial power < 0");
    MPoly r = MPoly::constant(1);
    MPoly base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

MPoly MPoly::derive(size_t var, int order) const {
    MPoly r = *this;
    for (int it = 0; it < order; ++it) {
        MPoly d;
        for (const auto& [m, c] : r.terms_) {
            int e = m.exponent(var);
            if (e == 0) continue;
            Mono mm = m;
            mm.e[var] -= 1;
            mm.trim();
            d.add_term(mm, c * e);
        }
        r = d;
    }
    return r;
}

MPoly MPoly::eval_var(size_t var, const Rat& value) const {
    MPoly r;
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(var);
        Mono mm = m;
        if (e > 0) {
            mm.e[var] = 0;
            mm.trim();
        }
        Rat scale = c;
        for (int i = 0; i < e; ++i) scale *= value;
        r.add_term(mm, scale);
    }
    return r;
}

Rat MPoly::eval_all(const std::vector<Rat>& point) const {
    Rat total = 0;
    for (const auto& [m, c] : terms_) {
        Rat v = c;
        for (size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (i >= point.size()) fail(err::OutOfRange, "evaluation point too short");
            for (int k = 0; k < m.e[i]; ++k) v *= point[i];
        }
        total += v;
    }
    return total;
}

MPoly MPoly::swap_vars(size_t i, size_t j) const {
    MPoly r;
    for (const auto& [m, c] : terms_) {
        Mono mm = m;
        size_t need = std::max(i, j) + 1;
        if (mm.e.size() < need) mm.e.resize(need, 0);
        std::swap(mm.e[i], mm.e[j]);
        mm.trim();
        r.add_term(mm, c);
    }
    return r;
}

MPoly MPoly::subst_mono(size_t var, const Mono& m, const Rat& c) const {
    MPoly r;
    for (const auto& [mm, x] : terms_) {
        int e = mm.exponent(var);
        Mono base = mm;
        if (e > 0) {
            base.e[var] = 0;
            base.trim();
        }
        Rat scale = x;
        for (int i = 0; i < e; ++i) scale *= c;
        r.add_term(base * m.pow(e), scale);
    }
    return r;
}

Rat MPoly::rational_content() const {
    if (terms_.empty()) return Rat(1);
    mpz_class g = 0, l = 1;
    for (const auto& [m, c] : terms_) {
        mpz_class num = abs(c.get_num());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
        mpz_class den = c.get_den();
        mpz_class gg;
        mpz_gcd(gg.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        l = l / gg * den;
    }
    Rat content(g, l);
    content.canonicalize();
    if (lead_coeff() < 0) content = -content;
    return content;
}

MPoly MPoly::primitive_part() const {
    if (terms_.empty()) return *this;
    return scaled(Rat(1) / rational_content());
}

MPoly operator*(const Rat& c, const MPoly& p) { return p.scaled(c); }

MPoly mpoly_divexact(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) fail(err::DivisionByZero, "polynomial division by zero");
    MPoly rem = a, quot;
    while (!rem.is_zero()) {
        if (!b.lead_mono().divides(rem.lead_mono()))
            fail(err::NonPolynomialQuotient, "inexact polynomial division");
        Mono m = rem.lead_mono() / b.lead_mono();
        Rat c = rem.lead_coeff() / b.lead_coeff();
        quot.add_term(m, c);
        rem -= b.mul_mono(m, c);
    }
    return quot;
}

namespace {

// Univariate view: coefficients of v^0, v^1, ... as polynomials in the
// remaining variables.
std::vector<MPoly> coeffs_in(const MPoly& p, size_t v) {
    std::vector<MPoly> out(static_cast<size_t>(p.deg_in(v)) + 1);
    for (const auto& [m, c] : p.terms()) {
        int e = m.exponent(v);
        Mono mm = m;
        if (e > 0) {
            mm.e[v] = 0;
            mm.trim();
        }
        out[static_cast<size_t>(e)].add_term(mm, c);
    }
    return out;
}

MPoly assemble_in(const std::vector<MPoly>& cs, size_t v) {
    MPoly p;
    for (size_t i = 0; i < cs.size(); ++i)
        if (!cs[i].is_zero()) p += cs[i].mul_mono(Mono::var(v, static_cast<int>(i)), 1);
    return p;
}

int deg_of(const std::vector<MPoly>& cs) {
    for (int i = static_cast<int>(cs.size()) - 1; i >= 0; --i)
        if (!cs[i].is_zero()) return i;
    return -1;
}

// Pseudo-remainder of A by B as univariate polynomials in v (scalars are
// polynomials in the other variables); result only meaningful up to content,
// which is all the primitive PRS below needs.
MPoly prem(const MPoly& A, const MPoly& B, size_t v) {
    std::vector<MPoly> a = coeffs_in(A, v);
    std::vector<MPoly> b = coeffs_in(B, v);
    int db = deg_of(b);
    MPoly lb = b[static_cast<size_t>(db)];
    int da = deg_of(a);
    while (da >= db && da >= 0) {
        MPoly la = a[static_cast<size_t>(da)];
        // a := lb*a - la*v^(da-db)*b
        std::vector<MPoly> next(a.size());
        for (size_t i = 0; i < a.size(); ++i) next[i] = lb * a[i];
        for (int i = 0; i <= db; ++i) {
            size_t pos = static_cast<size_t>(da - db + i);
            next[pos] -= la * b[static_cast<size_t>(i)];
        }
        a = next;
        int nd = deg_of(a);
        if (nd >= da) fail(err::OutOfRange, "pseudo-division failed to reduce degree");
        da = nd;
    }
    return assemble_in(a, v);
}

MPoly content_in(const MPoly& p, size_t v);

MPoly gcd_impl(MPoly a, MPoly b) {
    if (a.is_zero()) return b.is_zero() ? MPoly::constant(1) : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    if (a.is_constant() || b.is_constant()) return MPoly::constant(1);
    size_t v = std::max(a.top_var(), b.top_var());
    MPoly ca = content_in(a, v), cb = content_in(b, v);
    MPoly c = gcd_impl(ca, cb);
    MPoly pa = mpoly_divexact(a, ca).primitive_part();
    MPoly pb = mpoly_divexact(b, cb).primitive_part();
    // A side free of v reduces to its content, so only c survives.
    if (pa.is_constant() || pb.is_constant()) return c.primitive_part();
    if (pa.deg_in(v) < pb.deg_in(v)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        MPoly r = prem(pa, pb, v).primitive_part();
        pa = pb;
        if (r.is_zero()) {
            pb = MPoly::zero();
        } else {
            // Keeping remainders primitive (polynomial content and rational
            // scale both stripped) is what bounds coefficient growth here.
            pb = mpoly_divexact(r, content_in(r, v)).primitive_part();
        }
    }
    return (c * pa).primitive_part();
}

// Content of p viewed as univariate in v: gcd of the v-coefficients.
MPoly content_in(const MPoly& p, size_t v) {
    std::vector<MPoly> cs = coeffs_in(p, v);
    MPoly g;
    for (const auto& q : cs) {
        if (q.is_zero()) continue;
        g = g.is_zero() ? q.primitive_part() : gcd_impl(g, q);
        if (g.is_one()) break;
    }
    if (g.is_zero()) g = MPoly::constant(1);
    return g;
}

// Non-throwing exact division used to certify heuristic gcd candidates.
bool try_divexact(const MPoly& a, const MPoly& b, MPoly& q) {
    MPoly rem = a, quot;
    while (!rem.is_zero()) {
        if (!b.lead_mono().divides(rem.lead_mono())) return false;
        Mono m = rem.lead_mono() / b.lead_mono();
        Rat c = rem.lead_coeff() / b.lead_coeff();
        quot.add_term(m, c);
        rem -= b.mul_mono(m, c);
    }
    q = quot;
    return true;
}

Mono min_exponents(const MPoly& p) {
    Mono lo = p.lead_mono();
    for (const auto& [m, c] : p.terms()) {
        for (size_t v = 0; v < lo.e.size(); ++v) {
            int e = m.exponent(v);
            if (e < lo.e[v]) lo.e[v] = static_cast<uint16_t>(e);
        }
    }
    lo.trim();
    return lo;
}

mpz_class poly_height(const MPoly& p) {
    mpz_class h = 0;
    for (const auto& [m, c] : p.terms()) {
        mpz_class a = abs(c.get_num());
        if (a > h) h = a;
    }
    return h;
}

// Horner evaluation of the variable v at an integer point.
MPoly eval_horner(const MPoly& p, size_t v, const Rat& xi) {
    std::vector<MPoly> cs = coeffs_in(p, v);
    MPoly acc;
    for (int i = deg_of(cs); i >= 0; --i) {
        acc = acc.scaled(xi);
        acc += cs[static_cast<size_t>(i)];
    }
    return acc;
}

mpz_class smod_balanced(const mpz_class& z, const mpz_class& xi) {
    mpz_class r = z % xi;
    if (r < 0) r += xi;
    if (r * 2 > xi) r -= xi;
    return r;
}

// Heuristic gcd (Char-Geddes-Gonnet): evaluate one variable at a large
// integer, take the gcd one level down, and lift it back through balanced
// base-xi digits.  Candidates are certified by exact trial division into
// both inputs, so a heuristic miss only ever causes a fallback to the
// primitive PRS, never a wrong answer.  Inputs must have integer
// coefficients.
bool heur_gcd_rec(const MPoly& a, const MPoly& b, MPoly& out, int depth) {
    if (depth > 4) return false;
    if (a.is_constant() && b.is_constant()) {
        mpz_class x = a.constant_term().get_num();
        mpz_class y = b.constant_term().get_num();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        out = MPoly::constant(Rat(g));
        return true;
    }
    size_t v = std::max(a.top_var(), b.top_var());
    int da = a.deg_in(v), db = b.deg_in(v);
    int cap = std::min(da, db);
    mpz_class ha = poly_height(a), hb = poly_height(b);
    mpz_class xi = 2 * (ha < hb ? ha : hb) + 2;
    if (xi < 64) xi = 64;
    for (int attempt = 0; attempt < 3; ++attempt) {
        size_t bits = mpz_sizeinbase(xi.get_mpz_t(), 2);
        if (bits * static_cast<size_t>(std::max(da, db) + 1) > 1500000) return false;
        MPoly image;
        if (heur_gcd_rec(eval_horner(a, v, Rat(xi)), eval_horner(b, v, Rat(xi)), image, depth + 1)) {
            MPoly cand;
            MPoly rest = image;
            bool fits = true;
            for (int i = 0; !rest.is_zero(); ++i) {
                if (i > cap) {
                    fits = false;
                    break;
                }
                MPoly digit;
                for (const auto& [m, c] : rest.terms()) {
                    mpz_class r = smod_balanced(c.get_num(), xi);
                    if (r != 0) digit.add_term(m, Rat(r));
                }
                if (!digit.is_zero()) cand += digit.mul_mono(Mono::var(v, i), 1);
                rest = (rest - digit).scaled(Rat(1) / Rat(xi));
            }
            if (fits && !cand.is_zero()) {
                // The integer content of inner-level candidates encodes the
                // evaluated variables' share of the gcd, so only the top
                // level may strip it.
                if (depth == 0) cand = cand.primitive_part();
                MPoly q;
                if (try_divexact(a, cand, q) && try_divexact(b, cand, q)) {
                    out = cand;
                    return true;
                }
            }
        }
        xi = xi * 73794 / 27011 + 17;
    }
    return false;
}

MPoly lead_coeff_in(const MPoly& p, size_t v) {
    std::vector<MPoly> cs = coeffs_in(p, v);
    return cs[static_cast<size_t>(deg_of(cs))];
}

// Dense bivariate gcd by interpolation: evaluate vint at small integers,
// take univariate gcds in vmain, and rebuild the vint-dependence by Newton
// interpolation.  An evaluation point can only inflate the image gcd, so
// images of minimal degree win; the leading coefficient is pinned to
// gcd(lc(a), lc(b)) so the interpolated polynomial is a fixed multiple of
// the primitive gcd.  The candidate is certified by exact trial division.
bool gcd_interp_bivar(const MPoly& a, const MPoly& b, size_t vmain, size_t vint, MPoly& out) {
    MPoly ca = content_in(a, vmain), cb = content_in(b, vmain);
    MPoly pa = mpoly_divexact(a, ca), pb = mpoly_divexact(b, cb);
    MPoly contg = gcd_impl(ca, cb);
    MPoly gam = gcd_impl(lead_coeff_in(pa, vmain), lead_coeff_in(pb, vmain));
    int bound = std::min(pa.deg_in(vint), pb.deg_in(vint)) + gam.deg_in(vint) + 1;
    std::vector<Rat> nodes;
    std::vector<MPoly> images;
    int dmin = -1;
    for (int step = 0; step < 2 * bound + 128 && static_cast<int>(nodes.size()) < bound; ++step) {
        int mag = (step + 1) / 2;
        Rat pc(step % 2 == 1 ? mag : -mag);
        Rat gc = gam.eval_var(vint, pc).constant_term();
        if (gc == 0) continue;
        MPoly h = gcd_impl(pa.eval_var(vint, pc), pb.eval_var(vint, pc));
        int d = h.deg_in(vmain);
        if (d == 0) {
            // a valid point proves the primitive part of the gcd is trivial
            out = contg;
            return true;
        }
        if (dmin < 0 || d < dmin) {
            dmin = d;
            nodes.clear();
            images.clear();
        }
        if (d > dmin) continue;
        Rat lc = lead_coeff_in(h, vmain).constant_term();
        images.push_back(h.scaled(gc / lc));
        nodes.push_back(pc);
    }
    if (static_cast<int>(nodes.size()) < bound) return false;
    std::vector<MPoly> dd = images;
    for (size_t k = 1; k < dd.size(); ++k)
        for (size_t i = dd.size(); i-- > k;)
            dd[i] = (dd[i] - dd[i - 1]).scaled(Rat(1) / (nodes[i] - nodes[i - k]));
    MPoly w = dd.back();
    for (size_t i = dd.size() - 1; i-- > 0;) {
        MPoly lin = MPoly::var(vint, 1) - MPoly::constant(nodes[i]);
        w = w * lin + dd[i];
    }
    if (w.is_zero()) return false;
    w = mpoly_divexact(w, content_in(w, vmain)).primitive_part();
    MPoly cand = contg * w;
    MPoly q;
    if (try_divexact(a, cand, q) && try_divexact(b, cand, q)) {
        out = cand;
        return true;
    }
    return false;
}

} // namespace

MPoly mpoly_gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return b.is_zero() ? MPoly::constant(1) : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    if (a.is_constant() || b.is_constant()) return MPoly::constant(1);
    MPoly pa = a.primitive_part(), pb = b.primitive_part();
    if (pa == pb) return pa;
    if (pa.n_terms() == 1 || pb.n_terms() == 1) {
        Mono la = min_exponents(pa), lb = min_exponents(pb);
        Mono lo = la;
        for (size_t v = 0; v < lo.e.size(); ++v) {
            int e = lb.exponent(v);
            if (e < lo.e[v]) lo.e[v] = static_cast<uint16_t>(e);
        }
        lo.trim();
        MPoly g;
        g.add_term(lo, 1);
        return g;
    }
    MPoly g;
    if (heur_gcd_rec(pa, pb, g, 0)) return g.is_constant() ? MPoly::constant(1) : g;
    size_t top = std::max(pa.top_var(), pb.top_var());
    std::vector<size_t> vs;
    for (size_t v = 0; v <= top; ++v)
        if (pa.deg_in(v) > 0 || pb.deg_in(v) > 0) vs.push_back(v);
    if (vs.size() == 2) {
        size_t v0 = vs[0], v1 = vs[1];
        size_t vint = std::min(pa.deg_in(v0), pb.deg_in(v0)) <= std::min(pa.deg_in(v1), pb.deg_in(v1)) ? v0 : v1;
        size_t vmain = vint == v0 ? v1 : v0;
        if (gcd_interp_bivar(pa, pb, vmain, vint, g)) return g.is_constant() ? MPoly::constant(1) : g;
    }
    return gcd_impl(a, b);
}

std::string MPoly::str(const VarNames& vars) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool printed = false;
        if (a != 1 || m.is_one()) {
            out << rat_str(a);
            printed = true;
        }
        for (size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (printed) out << "*";
            out << vars.name(i);
            if (m.e[i] > 1) out << "^" << static_cast<int>(m.e[i]);
            printed = true;
        }
    }
    return out.str();
}

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail(err::ParseError, "expected number in polynomial at offset " + std::to_string(pos));
        return s.substr(start, pos - start);
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (start == pos) fail(err::ParseError, "expected identifier in polynomial at offset " + std::to_string(pos));
        return s.substr(start, pos - start);
    }
};

} // namespace

MPoly MPoly::parse(const std::string& s, const VarNames& vars) {
    Lexer lx{s};
    MPoly total;
    bool first = true;
    while (!lx.done()) {
        int sign = 1;
        if (lx.eat('+')) {
            sign = 1;
        } else if (lx.eat('-')) {
            sign = -1;
        } else if (!first) {
            fail(err::ParseError, "expected + or - between polynomial terms");
        }
        first = false;
        Rat coeff = sign;
        Mono mono = Mono::one();
        bool want_factor = true;
        while (want_factor) {
            char c = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num = lx.number();
                std::string lit = num;
                if (lx.eat('/')) lit += "/" + lx.number();
                coeff *= rat_parse(lit);
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string name = lx.ident();
                int idx = vars.index_of(name);
                if (idx < 0) fail(err::ParseError, "unknown variable: " + name);
                int pow = 1;
                if (lx.eat('^')) pow = std::stoi(lx.number());
                mono = mono * Mono::var(static_cast<size_t>(idx), pow);
            } else {
                fail(err::ParseError, "unexpected character in polynomial");
            }
            want_factor = lx.eat('*');
        }
        coeff.canonicalize();
        total.add_term(mono, coeff);
    }
    return total;
}

} // namespace hh

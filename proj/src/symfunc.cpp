#include "hookharm/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "hookharm/tensor.hpp"

namespace hh {

Basis basis_from_char(char c) {
    switch (c) {
        case 'm': return Basis::m;
        case 'e': return Basis::e;
        case 'h': return Basis::h;
        case 'p': return Basis::p;
        case 's': return Basis::s;
        case 'f': return Basis::f;
    }
    fail(err::Usage, std::string("unknown basis letter: ") + c);
}

namespace {

std::mutex table_mutex;

long char_rec(const Partition& lam, const Partition& mu) {
    if (lam.empty()) return 1;
    static std::map<std::pair<Partition, Partition>, long> cache;
    auto key = std::make_pair(lam, mu);
    {
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    int r = mu[0];
    Partition rest(mu.begin() + 1, mu.end());
    int L = static_cast<int>(lam.size());
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i) beta[i] = lam[i] + (L - 1 - i);
    long total = 0;
    for (int i = 0; i < L; ++i) {
        int nb = beta[i] - r;
        if (nb < 0) continue;
        bool occupied = false;
        int crossings = 0;
        for (int j = 0; j < L; ++j) {
            if (j == i) continue;
            if (beta[j] == nb) occupied = true;
            if (beta[j] > nb && beta[j] < beta[i]) ++crossings;
        }
        if (occupied) continue;
        std::vector<int> nbeta = beta;
        nbeta[i] = nb;
        std::sort(nbeta.begin(), nbeta.end(), std::greater<int>());
        Partition nlam(L);
        for (int j = 0; j < L; ++j) nlam[j] = nbeta[j] - (L - 1 - j);
        while (!nlam.empty() && nlam.back() == 0) nlam.pop_back();
        long sub = char_rec(nlam, rest);
        total += (crossings % 2 == 0) ? sub : -sub;
    }
    cache[key] = total;
    return total;
}

struct DegreeTables {
    std::vector<Partition> parts;
    std::map<Partition, int> index;
    std::vector<std::vector<long>> inv_kost;
};

const DegreeTables& degree_tables(int n) {
    static std::map<int, DegreeTables> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    DegreeTables t;
    t.parts = partitions_of(n);
    int m = static_cast<int>(t.parts.size());
    for (int i = 0; i < m; ++i) t.index[t.parts[i]] = i;
    // Kostka matrix is unitriangular in this order (nonzero only when the
    // row shape dominates the column content), so the inverse is integral
    // and solvable by back substitution.
    std::vector<std::vector<long>> kost(m, std::vector<long>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) kost[i][j] = kostka(t.parts[i], t.parts[j]);
    t.inv_kost.assign(m, std::vector<long>(m, 0));
    for (int j = 0; j < m; ++j) {
        t.inv_kost[j][j] = 1;
        for (int i = j - 1; i >= 0; --i) {
            long s = 0;
            for (int k = i + 1; k <= j; ++k) s += kost[i][k] * t.inv_kost[k][j];
            t.inv_kost[i][j] = -s;
        }
    }
    return cache.emplace(n, std::move(t)).first->second;
}

using PMap = std::map<Partition, Rat>;

PMap pmap_mul(const PMap& a, const PMap& b) {
    PMap out;
    for (const auto& [la, ca] : a)
        for (const auto& [lb, cb] : b) {
            Partition merged = la;
            merged.insert(merged.end(), lb.begin(), lb.end());
            std::sort(merged.begin(), merged.end(), std::greater<int>());
            Rat c = ca * cb;
            auto [it, fresh] = out.emplace(merged, c);
            if (!fresh) {
                it->second += c;
                if (it->second == 0) out.erase(it);
            }
        }
    return out;
}

const PMap& basis_in_p(Basis b, const Partition& lam);

PMap compute_basis_in_p(Basis b, const Partition& lam) {
    int n = partition_size(lam);
    PMap out;
    switch (b) {
        case Basis::p:
            out[lam] = 1;
            return out;
        case Basis::h:
        case Basis::e: {
            out[Partition{}] = 1;
            for (int part : lam) {
                PMap one;
                for (const auto& mu : partitions_of(part)) {
                    Rat c = Rat(1) / Rat(z_of(mu));
                    if (b == Basis::e && (part - static_cast<int>(mu.size())) % 2 == 1) c = -c;
                    one[mu] = c;
                }
                out = pmap_mul(out, one);
            }
            return out;
        }
        case Basis::s: {
            for (const auto& mu : partitions_of(n)) {
                long x = char_rec(lam, mu);
                if (x != 0) out[mu] = Rat(x) / Rat(z_of(mu));
            }
            return out;
        }
        case Basis::m:
        case Basis::f: {
            const DegreeTables& t = degree_tables(n);
            int i = t.index.at(lam);
            for (size_t j = i; j < t.parts.size(); ++j) {
                long r = t.inv_kost[i][j];
                if (r == 0) continue;
                for (const auto& [mu, c] : basis_in_p(Basis::s, t.parts[j])) {
                    Rat add = Rat(r) * c;
                    auto [it, fresh] = out.emplace(mu, add);
                    if (!fresh) {
                        it->second += add;
                        if (it->second == 0) out.erase(it);
                    }
                }
            }
            if (b == Basis::f) {
                for (auto& [mu, c] : out)
                    if ((partition_size(mu) - static_cast<int>(mu.size())) % 2 == 1) c = -c;
            }
            return out;
        }
    }
    fail(err::Usage, "unknown basis");
}

const PMap& basis_in_p(Basis b, const Partition& lam) {
    static std::map<std::pair<char, Partition>, PMap> cache;
    auto key = std::make_pair(static_cast<char>(b), lam);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    PMap v = compute_basis_in_p(b, lam);
    return cache.emplace(std::move(key), std::move(v)).first->second;
}

using RMap = std::map<Partition, RatFunc>;

void rmap_add(RMap& out, const Partition& lam, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = out.emplace(lam, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
    }
}

// Dual partner under the Hall pairing, used to read coefficients off the
// power sum expansion.
Basis hall_dual(Basis b) {
    switch (b) {
        case Basis::m: return Basis::h;
        case Basis::h: return Basis::m;
        case Basis::e: return Basis::f;
        case Basis::f: return Basis::e;
        default: return b;
    }
}

} // namespace

long char_value(const Partition& lam, const Partition& mu) {
    check_partition(lam);
    check_partition(mu);
    if (partition_size(lam) != partition_size(mu))
        fail(err::SizeMismatch, "character shape and cycle type sizes differ");
    std::lock_guard<std::mutex> lock(table_mutex);
    return char_rec(lam, mu);
}

SymFunc SymFunc::one(Basis b) { return elem(b, Partition{}); }

SymFunc SymFunc::elem(Basis b, const Partition& lam) {
    check_partition(lam);
    SymFunc f(b);
    f.coef_[lam] = RatFunc(Rat(1));
    return f;
}

void SymFunc::add_term(const Partition& lam, const RatFunc& c) { rmap_add(coef_, lam, c); }

SymFunc SymFunc::to_basis(Basis b) const {
    if (b == basis_ || coef_.empty()) {
        SymFunc out(b);
        out.coef_ = coef_;
        return out;
    }
    // first into p coordinates
    RMap pc;
    if (basis_ == Basis::p) {
        pc = coef_;
    } else {
        std::lock_guard<std::mutex> lock(table_mutex);
        for (const auto& [lam, c] : coef_)
            for (const auto& [mu, r] : basis_in_p(basis_, lam)) rmap_add(pc, mu, c * RatFunc(r));
    }
    SymFunc out(b);
    if (b == Basis::p) {
        out.coef_ = std::move(pc);
        return out;
    }
    // group by degree, then read off coefficients against the dual basis
    std::map<int, RMap> by_deg;
    for (const auto& [mu, c] : pc) by_deg[partition_size(mu)][mu] = c;
    std::lock_guard<std::mutex> lock(table_mutex);
    for (const auto& [n, part_pc] : by_deg) {
        for (const auto& lam : partitions_of(n)) {
            RatFunc c;
            if (b == Basis::s) {
                for (const auto& [mu, r] : part_pc) c += r * RatFunc(Rat(char_rec(lam, mu)));
            } else {
                const PMap& dual = basis_in_p(hall_dual(b), lam);
                for (const auto& [mu, r] : part_pc) {
                    auto it = dual.find(mu);
                    if (it != dual.end()) c += r * RatFunc(Rat(z_of(mu)) * it->second);
                }
            }
            rmap_add(out.coef_, lam, c);
        }
    }
    return out;
}

RatFunc SymFunc::coeff_in(Basis b, const Partition& lam) const {
    SymFunc f = to_basis(b);
    auto it = f.coef_.find(lam);
    return it == f.coef_.end() ? RatFunc() : it->second;
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
    SymFunc rhs = o.to_basis(basis_);
    SymFunc out(basis_);
    out.coef_ = coef_;
    for (const auto& [lam, c] : rhs.coef_) rmap_add(out.coef_, lam, c);
    return out;
}

SymFunc SymFunc::operator-(const SymFunc& o) const { return *this + (-o); }

SymFunc SymFunc::operator-() const {
    SymFunc out(basis_);
    for (const auto& [lam, c] : coef_) out.coef_[lam] = -c;
    return out;
}

SymFunc SymFunc::operator*(const SymFunc& o) const {
    SymFunc a = to_basis(Basis::p), b = o.to_basis(Basis::p);
    SymFunc out(Basis::p);
    for (const auto& [la, ca] : a.coef_)
        for (const auto& [lb, cb] : b.coef_) {
            Partition merged = la;
            merged.insert(merged.end(), lb.begin(), lb.end());
            std::sort(merged.begin(), merged.end(), std::greater<int>());
            rmap_add(out.coef_, merged, ca * cb);
        }
    return out.to_basis(basis_);
}

bool SymFunc::operator==(const SymFunc& o) const {
    if (basis_ == o.basis_) return coef_ == o.coef_;
    return to_basis(Basis::p).coef() == o.to_basis(Basis::p).coef();
}

SymFunc SymFunc::scaled(const RatFunc& c) const {
    SymFunc out(basis_);
    if (c.is_zero()) return out;
    for (const auto& [lam, x] : coef_) out.coef_[lam] = x * c;
    return out;
}

int SymFunc::max_degree() const {
    int d = -1;
    for (const auto& [lam, c] : coef_) d = std::max(d, partition_size(lam));
    return d;
}

bool SymFunc::is_homogeneous() const {
    int d = -1;
    for (const auto& [lam, c] : coef_) {
        int n = partition_size(lam);
        if (d >= 0 && n != d) return false;
        d = n;
    }
    return true;
}

SymFunc SymFunc::component(int d) const {
    SymFunc out(basis_);
    for (const auto& [lam, c] : coef_)
        if (partition_size(lam) == d) out.coef_[lam] = c;
    return out;
}

SymFunc SymFunc::length_at_most(int L) const {
    SymFunc f = to_basis(Basis::s);
    SymFunc out(Basis::s);
    for (const auto& [lam, c] : f.coef_)
        if (static_cast<int>(lam.size()) <= L) out.coef_[lam] = c;
    return out;
}

SymFunc SymFunc::omega() const {
    SymFunc f = to_basis(Basis::p);
    SymFunc out(Basis::p);
    for (const auto& [lam, c] : f.coef_) {
        if ((partition_size(lam) - static_cast<int>(lam.size())) % 2 == 1)
            out.coef_[lam] = -c;
        else
            out.coef_[lam] = c;
    }
    return out.to_basis(basis_);
}

RatFunc SymFunc::hall(const SymFunc& g) const {
    SymFunc a = to_basis(Basis::p), b = g.to_basis(Basis::p);
    RatFunc out;
    for (const auto& [lam, ca] : a.coef()) {
        auto it = b.coef().find(lam);
        if (it != b.coef().end()) out += ca * it->second * RatFunc(Rat(z_of(lam)));
    }
    return out;
}

SymFunc SymFunc::skew_by(const SymFunc& g) const {
    SymFunc a = to_basis(Basis::p), b = g.to_basis(Basis::p);
    SymFunc out(Basis::p);
    for (const auto& [lam, ca] : a.coef()) {
        std::map<int, int> lam_mult;
        for (int k : lam) lam_mult[k] += 1;
        for (const auto& [mu, cb] : b.coef()) {
            std::map<int, int> mu_mult;
            for (int k : mu) mu_mult[k] += 1;
            Rat mult = 1;
            bool ok = true;
            for (const auto& [k, j] : mu_mult) {
                int m = lam_mult.count(k) ? lam_mult.at(k) : 0;
                if (j > m) {
                    ok = false;
                    break;
                }
                for (int step = 0; step < j; ++step) mult *= Rat(k) * Rat(m - step);
            }
            if (!ok) continue;
            Partition rest;
            for (const auto& [k, m] : lam_mult) {
                int keep = m - (mu_mult.count(k) ? mu_mult.at(k) : 0);
                for (int i = 0; i < keep; ++i) rest.push_back(k);
            }
            std::sort(rest.begin(), rest.end(), std::greater<int>());
            rmap_add(out.coef_, rest, ca * cb * RatFunc(mult));
        }
    }
    return out.to_basis(basis_);
}

SymFunc SymFunc::pleth_scale(const std::function<RatFunc(int)>& c) const {
    SymFunc f = to_basis(Basis::p);
    SymFunc out(Basis::p);
    for (const auto& [lam, x] : f.coef()) {
        RatFunc scale = x;
        for (int k : lam) scale *= c(k);
        rmap_add(out.coef_, lam, scale);
    }
    return out.to_basis(basis_);
}

RatFunc SymFunc::pleth_eval(const std::function<RatFunc(int)>& v) const {
    SymFunc f = to_basis(Basis::p);
    RatFunc out;
    for (const auto& [lam, x] : f.coef()) {
        RatFunc term = x;
        for (int k : lam) term *= v(k);
        out += term;
    }
    return out;
}

SymFunc SymFunc::pleth_shift_one() const {
    SymFunc f = to_basis(Basis::p);
    SymFunc out(Basis::p);
    for (const auto& [lam, x] : f.coef()) {
        // expand the product of (1 + p_k) over the parts of lam
        std::vector<std::pair<int, int>> mult; // (part, multiplicity)
        for (int k : lam) {
            if (!mult.empty() && mult.back().first == k)
                mult.back().second += 1;
            else
                mult.emplace_back(k, 1);
        }
        struct Rec {
            const std::vector<std::pair<int, int>>& mult;
            SymFunc& out;
            const RatFunc& x;
            Partition cur;
            void go(size_t i, Rat binom) {
                if (i == mult.size()) {
                    Partition sorted = cur;
                    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
                    out.add_term(sorted, x * RatFunc(binom));
                    return;
                }
                auto [k, m] = mult[i];
                Rat choose = 1;
                for (int j = 0; j <= m; ++j) {
                    go(i + 1, binom * choose);
                    if (j < m) {
                        cur.push_back(k);
                        choose = choose * Rat(m - j) / Rat(j + 1);
                    }
                }
                for (int j = 0; j < m; ++j) cur.pop_back();
            }
        };
        Rec rec{mult, out, x, {}};
        rec.go(0, Rat(1));
    }
    return out.to_basis(basis_);
}

std::string SymFunc::str(const VarNames& vars) const {
    if (coef_.empty()) return "0";
    std::vector<const Coef::value_type*> terms;
    for (const auto& kv : coef_) terms.push_back(&kv);
    std::sort(terms.begin(), terms.end(), [](const auto* a, const auto* b) {
        int da = partition_size(a->first), db = partition_size(b->first);
        if (da != db) return da > db;
        return a->first > b->first;
    });
    char letter = static_cast<char>(basis_);
    std::ostringstream out;
    bool first = true;
    for (const auto* kv : terms) {
        const Partition& lam = kv->first;
        std::string cs = kv->second.str(vars);
        std::string name = lam.empty() ? "" : std::string(1, letter) + "_{" + partition_str(lam) + "}";
        std::string term;
        if (name.empty()) {
            term = cs.find(' ') != std::string::npos ? "(" + cs + ")" : cs;
        } else if (cs == "1") {
            term = name;
        } else if (cs == "-1") {
            term = "-" + name;
        } else if (cs.find(' ') != std::string::npos) {
            term = "(" + cs + ")*" + name;
        } else {
            term = cs + "*" + name;
        }
        if (first) {
            out << term;
            first = false;
        } else if (term[0] == '-') {
            out << " - " << term.substr(1);
        } else {
            out << " + " << term;
        }
    }
    return out.str();
}

SymFunc operator*(const RatFunc& c, const SymFunc& f) { return f.scaled(c); }

MPoly schur_poly(const Partition& lam, int k) {
    check_partition(lam);
    if (k <= 0) fail(err::OutOfRange, "need at least one variable");
    static std::mutex mtx;
    static std::map<std::pair<Partition, int>, MPoly> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(lam, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    MPoly out;
    if (static_cast<int>(lam.size()) <= k) {
        int total = partition_size(lam);
        struct Rec {
            const Partition& lam;
            int k, total;
            MPoly& out;
            std::vector<uint16_t> expo;
            void go(const Partition& cur, int filled, int v) {
                if (v == k) {
                    if (filled == total) {
                        Mono m;
                        m.e = expo;
                        m.trim();
                        out.add_term(m, 1);
                    }
                    return;
                }
                for (int s = 0; s <= total - filled; ++s) {
                    auto exts = horizontal_strips(cur, lam, s);
                    if (exts.empty()) break; // no strips of any larger size either
                    for (const Partition& e : exts) {
                        expo[v] = static_cast<uint16_t>(s);
                        go(e, filled + s, v + 1);
                    }
                }
                expo[v] = 0;
            }
        };
        Rec rec{lam, k, total, out, std::vector<uint16_t>(k, 0)};
        rec.go(Partition{}, 0, 0);
    }
    return cache.emplace(std::move(key), std::move(out)).first->second;
}

std::map<Partition, Rat> glk_schur_expand(const MPoly& g, int k) {
    if (k <= 0) fail(err::OutOfRange, "need at least one variable");
    std::map<Partition, Rat> out;
    MPoly rest = g;
    while (!rest.is_zero()) {
        Mono lead = rest.lead_mono();
        if (lead.e.size() > static_cast<size_t>(k))
            fail(err::NotSymmetric, "polynomial uses more variables than the group rank");
        Partition alpha;
        for (size_t i = 0; i < lead.e.size(); ++i) alpha.push_back(lead.e[i]);
        for (size_t i = 1; i < alpha.size(); ++i)
            if (alpha[i] > alpha[i - 1])
                fail(err::NotSymmetric, "leading exponent is not weakly decreasing");
        while (!alpha.empty() && alpha.back() == 0) alpha.pop_back();
        Rat c = rest.lead_coeff();
        out[alpha] += c;
        rest -= c * schur_poly(alpha, k);
        if (!rest.is_zero() && !(mono_cmp(rest.lead_mono(), lead) < 0))
            fail(err::NotSymmetric, "expansion failed to reduce the leading term");
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0)
            it = out.erase(it);
        else
            ++it;
    }
    return out;
}

size_t TensorSF::n_terms() const {
    size_t total = 0;
    for (const auto& [mu, row] : by_inner_) total += row.size();
    return total;
}

void TensorSF::add_term(const Partition& outer, const Partition& inner, long mult) {
    if (mult == 0) return;
    check_partition(outer);
    check_partition(inner);
    if (!by_inner_.empty() && partition_size(inner) != inner_size())
        fail(err::SizeMismatch, "inner shape " + partition_str(inner) + " has size " +
                                    std::to_string(partition_size(inner)) + ", expected " +
                                    std::to_string(inner_size()));
    auto& row = by_inner_[inner];
    long& slot = row[outer];
    slot += mult;
    if (slot == 0) {
        row.erase(outer);
        if (row.empty()) by_inner_.erase(inner);
    }
}

long TensorSF::mult(const Partition& outer, const Partition& inner) const {
    auto it = by_inner_.find(inner);
    if (it == by_inner_.end()) return 0;
    auto jt = it->second.find(outer);
    return jt == it->second.end() ? 0 : jt->second;
}

int TensorSF::inner_size() const {
    return by_inner_.empty() ? -1 : partition_size(by_inner_.begin()->first);
}

TensorSF TensorSF::operator+(const TensorSF& o) const {
    TensorSF out = *this;
    for (const auto& [mu, row] : o.by_inner_)
        for (const auto& [lam, m] : row) out.add_term(lam, mu, m);
    return out;
}

TensorSF TensorSF::operator-(const TensorSF& o) const {
    TensorSF out = *this;
    for (const auto& [mu, row] : o.by_inner_)
        for (const auto& [lam, m] : row) out.add_term(lam, mu, -m);
    return out;
}

bool TensorSF::is_nonneg() const {
    for (const auto& [mu, row] : by_inner_)
        for (const auto& [lam, m] : row)
            if (m < 0) return false;
    return true;
}

TensorSF TensorSF::length_restrict(int k) const {
    if (k < 0) fail(err::OutOfRange, "length bound must be nonnegative");
    TensorSF out;
    for (const auto& [mu, row] : by_inner_)
        for (const auto& [lam, m] : row)
            if (static_cast<int>(lam.size()) <= k) out.add_term(lam, mu, m);
    return out;
}

SymFunc TensorSF::tensor_coeff(const Partition& inner) const {
    SymFunc out(Basis::s);
    auto it = by_inner_.find(inner);
    if (it == by_inner_.end()) return out;
    for (const auto& [lam, m] : it->second) out.add_term(lam, RatFunc(Rat(m)));
    return out;
}

SymFunc TensorSF::eval_glk(int k) const {
    SymFunc out(Basis::s);
    for (const auto& [mu, row] : by_inner_) {
        MPoly c;
        for (const auto& [lam, m] : row)
            if (static_cast<int>(lam.size()) <= k) c += schur_poly(lam, k).scaled(Rat(m));
        if (!c.is_zero()) out.add_term(mu, RatFunc(c));
    }
    return out;
}

std::string TensorSF::str() const {
    if (by_inner_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // inner groups from dominant shape down, outers small to large inside
    for (auto it = by_inner_.rbegin(); it != by_inner_.rend(); ++it) {
        std::vector<const std::pair<const Partition, long>*> outers;
        for (const auto& kv : it->second) outers.push_back(&kv);
        std::sort(outers.begin(), outers.end(), [](const auto* a, const auto* b) {
            int da = partition_size(a->first), db = partition_size(b->first);
            if (da != db) return da < db;
            return a->first < b->first;
        });
        for (const auto* kv : outers) {
            std::string name = kv->first.empty() ? "1" : "s_{" + partition_str(kv->first) + "}";
            long m = kv->second;
            std::string term;
            if (m == 1) {
                term = name;
            } else if (m == -1) {
                term = "-" + name;
            } else {
                term = std::to_string(m) + "*" + name;
            }
            term += " (x) s_{" + partition_str(it->first) + "}";
            if (first) {
                out << term;
                first = false;
            } else if (term[0] == '-') {
                out << " - " << term.substr(1);
            } else {
                out << " + " << term;
            }
        }
    }
    return out.str();
}

TensorSF to_tensor(const SymFunc& f, int k) {
    SymFunc fs = f.to_basis(Basis::s);
    TensorSF out;
    for (const auto& [mu, c] : fs.coef()) {
        std::map<Partition, Rat> ex = glk_schur_expand(c.as_poly(), k);
        for (const auto& [lam, r] : ex) out.add_term(lam, mu, rat_to_long(r));
    }
    return out;
}

} // namespace hh

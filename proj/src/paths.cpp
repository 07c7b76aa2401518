#include "hookharm/paths.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "hookharm/errors.hpp"

namespace hh {

DyckPath::DyckPath(Partition g, int order) : gamma(std::move(g)), n(order) {
    if (n < 0 || static_cast<int>(gamma.size()) > n)
        fail(err::OutOfRange, "path data longer than its order");
    for (size_t i = 0; i < gamma.size(); ++i) {
        if (gamma[i] < 0 || (i > 0 && gamma[i] > gamma[i - 1]))
            fail(err::BadPartition, "path rows must decrease weakly");
        if (gamma[i] > n - 1 - static_cast<int>(i))
            fail(err::OutOfRange, "row " + std::to_string(i) + " crosses the staircase");
    }
    gamma.resize(static_cast<size_t>(n), 0);
}

std::string DyckPath::str() const { return partition_str(gamma); }

namespace {

void subpaths_rec(const Partition& cap, Partition& cur, std::vector<Partition>& out) {
    size_t i = cur.size();
    if (i == cap.size()) {
        out.push_back(cur);
        return;
    }
    int hi = std::min(cap[i], i > 0 ? cur[i - 1] : cap[0]);
    for (int v = hi; v >= 0; --v) {
        cur.push_back(v);
        subpaths_rec(cap, cur, out);
        cur.pop_back();
    }
}

// U/D word of the path, read from the diagonal end: the j-th up step is
// preceded by gamma[n - j] down steps in total, j = 1..n.
std::string word_of(const DyckPath& p) {
    std::string w;
    int prev = 0;
    for (int j = 1; j <= p.n; ++j) {
        int x = p.gamma[static_cast<size_t>(p.n - j)];
        w.append(static_cast<size_t>(x - prev), 'D');
        w.push_back('U');
        prev = x;
    }
    w.append(static_cast<size_t>(p.n - prev), 'D');
    return w;
}

DyckPath path_of_word(const std::string& w, int n) {
    Partition g(static_cast<size_t>(n), 0);
    int down = 0, ups = 0;
    for (char c : w) {
        if (c == 'D') {
            ++down;
        } else {
            g[static_cast<size_t>(n - 1 - ups)] = down;
            ++ups;
        }
    }
    return DyckPath(std::move(g), n);
}

// Longest chain from a up to b, -1 when b is not above a.
int longest_above(const DyckPath& a, const DyckPath& b, std::map<Partition, int>& memo) {
    if (a == b) return 0;
    auto it = memo.find(a.gamma);
    if (it != memo.end()) return it->second;
    int best = -1;
    for (const DyckPath& c : tamari_covers(a)) {
        int r = longest_above(c, b, memo);
        if (r >= 0 && r + 1 > best) best = r + 1;
    }
    memo[a.gamma] = best;
    return best;
}

} // namespace

std::vector<DyckPath> dyck_paths(int n) {
    if (n < 1) fail(err::OutOfRange, "path order must be positive");
    DyckPath cap = big_gamma(n, 0);
    std::vector<Partition> subs;
    Partition cur;
    subpaths_rec(cap.gamma, cur, subs);
    std::vector<DyckPath> out;
    out.reserve(subs.size());
    for (Partition& g : subs) out.emplace_back(std::move(g), n);
    return out;
}

int area(const DyckPath& p) {
    int total = 0;
    for (int i = 0; i < p.n; ++i) total += p.n - 1 - i - p.gamma[static_cast<size_t>(i)];
    return total;
}

DyckPath big_gamma(int n, int a) {
    if (n < 1) fail(err::OutOfRange, "path order must be positive");
    if (a < 0 || a > n - 1)
        fail(err::OutOfRange, "area bound " + std::to_string(a) + " outside 0.." + std::to_string(n - 1));
    Partition g(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) g[static_cast<size_t>(i)] = n - 1 - i;
    for (int i = n - 1 - a; i <= n - 2; ++i) g[static_cast<size_t>(i)] -= 1;
    return DyckPath(std::move(g), n);
}

SymFunc llt(const DyckPath& p, size_t var) {
    int n = p.n;
    if (n == 0) return SymFunc::one(Basis::s);
    // Row areas read bottom to top; diag[j] is the diagonal of strip cell j,
    // and cell j + 1 sits directly on top of cell j exactly when its
    // diagonal is one higher.
    std::vector<int> diag(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j)
        diag[static_cast<size_t>(j)] = j - p.gamma[static_cast<size_t>(n - 1 - j)];
    SymFunc out(Basis::m);
    for (const Partition& mu : partitions_of(n)) {
        std::vector<int> w;
        for (size_t i = 0; i < mu.size(); ++i)
            w.insert(w.end(), static_cast<size_t>(mu[i]), static_cast<int>(i) + 1);
        std::map<int, long> by_dinv;
        do {
            bool ok = true;
            for (int j = 0; ok && j + 1 < n; ++j)
                if (diag[j + 1] == diag[j] + 1 && w[j + 1] <= w[j]) ok = false;
            if (!ok) continue;
            int dinv = 0;
            for (int j = 0; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    if (diag[j] == diag[k] && w[j] < w[k]) ++dinv;
                    if (diag[j] == diag[k] + 1 && w[j] > w[k]) ++dinv;
                }
            ++by_dinv[dinv];
        } while (std::next_permutation(w.begin(), w.end()));
        MPoly c;
        for (const auto& [d, count] : by_dinv) c.add_term(Mono::var(var, d), Rat(count));
        if (!c.is_zero()) out.add_term(mu, RatFunc(c));
    }
    return out.to_basis(Basis::s);
}

SymFunc shuffle_rhs(int n, int a) {
    DyckPath cap = big_gamma(n, a);
    std::vector<Partition> subs;
    Partition cur;
    subpaths_rec(cap.gamma, cur, subs);
    SymFunc total(Basis::s);
    for (Partition& g : subs) {
        DyckPath p(std::move(g), n);
        int e = area(p) - a;
        if (e < 0) fail(err::NegativeExponent, "area below the bound at path " + p.str());
        total += llt(p, 0).scaled(RatFunc::var(1, e));
    }
    return total;
}

std::vector<DyckPath> tamari_covers(const DyckPath& p) {
    std::string w = word_of(p);
    std::vector<DyckPath> out;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] != 'D' || w[i + 1] != 'U') continue;
        size_t k = i + 1;
        int depth = 0;
        do {
            depth += w[k] == 'U' ? 1 : -1;
            ++k;
        } while (depth > 0);
        std::string r = w.substr(0, i) + w.substr(i + 1, k - i - 1) + "D" + w.substr(k);
        out.push_back(path_of_word(r, p.n));
    }
    return out;
}

size_t TamariRelation::index_of(const DyckPath& p) const {
    for (size_t i = 0; i < paths.size(); ++i)
        if (paths[i] == p) return i;
    fail(err::OutOfRange, "path " + p.str() + " is not of order " + std::to_string(n));
}

TamariRelation tamari(int n) {
    TamariRelation rel;
    rel.n = n;
    rel.paths = dyck_paths(n);
    std::map<Partition, size_t> index;
    for (size_t i = 0; i < rel.paths.size(); ++i) index[rel.paths[i].gamma] = i;
    rel.covers.resize(rel.paths.size());
    for (size_t i = 0; i < rel.paths.size(); ++i)
        for (const DyckPath& c : tamari_covers(rel.paths[i]))
            rel.covers[i].push_back(index.at(c.gamma));
    return rel;
}

int chain_d(const DyckPath& a, const DyckPath& b) {
    if (a.n != b.n) fail(err::SizeMismatch, "paths of different orders");
    std::map<Partition, int> memo;
    int r = longest_above(a, b, memo);
    if (r < 0) fail(err::NotComparable, a.str() + " is not below " + b.str());
    return r;
}

SymFunc trivariate_rhs(int n, int a) {
    if (a != 0 && a != 1 && a != n - 1)
        fail(err::OutOfRange, "interval sum defined for a in {0, 1, n-1}");
    DyckPath base = big_gamma(n, a);
    TamariRelation rel = tamari(n);
    // Covers strictly increase area, so area order is a topological order
    // for longest-chain sweeps.
    std::vector<size_t> topo(rel.paths.size());
    for (size_t i = 0; i < topo.size(); ++i) topo[i] = i;
    std::sort(topo.begin(), topo.end(),
              [&](size_t x, size_t y) { return area(rel.paths[x]) < area(rel.paths[y]); });
    auto dists_from = [&](size_t s) {
        std::vector<int> d(rel.paths.size(), -1);
        d[s] = 0;
        for (size_t x : topo)
            if (d[x] >= 0)
                for (size_t y : rel.covers[x])
                    if (d[x] + 1 > d[y]) d[y] = d[x] + 1;
        return d;
    };
    std::vector<int> up = dists_from(rel.index_of(base));
    std::vector<SymFunc> llt_in_t(rel.paths.size());
    SymFunc total(Basis::s);
    for (size_t alpha = 0; alpha < rel.paths.size(); ++alpha) {
        if (up[alpha] < 0) continue;
        std::vector<int> d = dists_from(alpha);
        for (size_t beta = 0; beta < rel.paths.size(); ++beta) {
            if (d[beta] < 0) continue;
            if (llt_in_t[beta].is_zero()) llt_in_t[beta] = llt(rel.paths[beta], 1);
            total += llt_in_t[beta].scaled(RatFunc::var(0, d[beta]));
        }
    }
    return total;
}

} // namespace hh

#include "hookharm/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hh {

void check_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) fail(err::BadPartition, "parts must be positive");
        if (i > 0 && p[i] > p[i - 1]) fail(err::BadPartition, "parts must be weakly decreasing");
    }
}

int partition_size(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0);
}

namespace {

void gen_partitions(int n, int max_part, int max_parts, Partition& cur,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    if (max_parts >= 0 && static_cast<int>(cur.size()) >= max_parts) return;
    for (int part = std::min(n, max_part); part >= 1; --part) {
        cur.push_back(part);
        gen_partitions(n - part, part, max_parts, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n, int max_parts) {
    if (n < 0) fail(err::BadPartition, "partition of a negative number");
    std::vector<Partition> out;
    Partition cur;
    gen_partitions(n, n, max_parts, cur, out);
    return out;
}

Partition conjugate(const Partition& p) {
    Partition out;
    if (p.empty()) return out;
    out.resize(p[0]);
    for (int c = 0; c < p[0]; ++c)
        out[c] = static_cast<int>(std::count_if(p.begin(), p.end(), [&](int row) { return row > c; }));
    return out;
}

bool dominates(const Partition& a, const Partition& b) {
    if (partition_size(a) != partition_size(b))
        fail(err::SizeMismatch, "dominance compares partitions of the same number");
    int sa = 0, sb = 0;
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa < sb) return false;
    }
    return true;
}

int n_stat(const Partition& p) {
    int s = 0;
    for (size_t i = 0; i < p.size(); ++i) s += static_cast<int>(i) * p[i];
    return s;
}

long z_of(const Partition& p) {
    long z = 1;
    int run = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        run += 1;
        z *= p[i];
        if (i + 1 == p.size() || p[i + 1] != p[i]) {
            for (int j = 2; j <= run; ++j) z *= j;
            run = 0;
        }
    }
    return z;
}

std::vector<std::pair<int, int>> cells(const Partition& p) {
    std::vector<std::pair<int, int>> out;
    for (size_t r = 0; r < p.size(); ++r)
        for (int c = 0; c < p[r]; ++c) out.emplace_back(static_cast<int>(r), c);
    return out;
}

int arm(const Partition& p, int r, int c) { return p[r] - c - 1; }

int leg(const Partition& p, int r, int c) {
    int l = 0;
    for (size_t i = r + 1; i < p.size(); ++i)
        if (p[i] > c) ++l;
    return l;
}

std::string partition_str(const Partition& p) {
    if (p.empty()) return "0";
    bool wide = p[0] > 9;
    std::ostringstream out;
    for (size_t i = 0; i < p.size(); ++i) {
        if (wide && i > 0) out << ",";
        out << p[i];
    }
    return out.str();
}

Partition partition_parse(const std::string& s) {
    Partition p;
    if (s.empty()) fail(err::ParseError, "empty partition literal");
    if (s == "0") return p;
    if (s.find(',') != std::string::npos) {
        std::istringstream in(s);
        std::string item;
        while (std::getline(in, item, ',')) {
            try {
                p.push_back(std::stoi(item));
            } catch (const std::exception&) {
                fail(err::ParseError, "bad partition literal: " + s);
            }
        }
    } else {
        for (char c : s) {
            if (c < '1' || c > '9') fail(err::ParseError, "bad partition literal: " + s);
            p.push_back(c - '0');
        }
    }
    check_partition(p);
    return p;
}

Hook::Hook(int a, int b) : arm(a), leg(b) {
    if (a < 0 || b < 0) fail(err::BadHook, "hook coordinates must be nonnegative");
}

Partition Hook::shape() const {
    Partition p(leg + 1, 1);
    p[0] = arm + 1;
    return p;
}

bool is_hook(const Partition& p) {
    if (p.empty()) return false;
    for (size_t i = 1; i < p.size(); ++i)
        if (p[i] != 1) return false;
    return true;
}

Hook hook_of(const Partition& p) {
    if (!is_hook(p)) fail(err::BadHook, "not a hook shape: " + partition_str(p));
    return Hook(p[0] - 1, static_cast<int>(p.size()) - 1);
}

std::vector<Partition> horizontal_strips(const Partition& inner, const Partition& outer, int size) {
    // choose new row lengths row by row; row r may grow at most to the old
    // length of row r-1 so that no two added cells share a column
    struct Rec {
        const Partition& inner;
        const Partition& outer;
        std::vector<Partition>& out;
        Partition cur;
        void go(size_t r, int remaining) {
            if (r == outer.size()) {
                if (remaining == 0) {
                    Partition p = cur;
                    while (!p.empty() && p.back() == 0) p.pop_back();
                    out.push_back(p);
                }
                return;
            }
            int old = r < inner.size() ? inner[r] : 0;
            int cap = outer[r];
            if (r > 0) {
                int old_above = r - 1 < inner.size() ? inner[r - 1] : 0;
                cap = std::min(cap, old_above);
            }
            for (int len = old; len <= cap && len - old <= remaining; ++len) {
                if (r > 0 && len > cur[r - 1]) break;
                cur.push_back(len);
                go(r + 1, remaining - (len - old));
                cur.pop_back();
            }
        }
    };
    std::vector<Partition> out;
    if (inner.size() > outer.size()) return out;
    Rec rec{inner, outer, out, {}};
    rec.go(0, size);
    return out;
}

std::vector<Tableau> ssyt_with_content(const Partition& shape, const std::vector<int>& content) {
    check_partition(shape);
    int total = 0;
    for (int c : content) {
        if (c < 0) fail(err::BadPartition, "negative content multiplicity");
        total += c;
    }
    std::vector<Tableau> out;
    if (total != partition_size(shape)) return out;

    struct Rec {
        const Partition& shape;
        const std::vector<int>& content;
        std::vector<Tableau>& out;
        std::vector<Partition> chain;
        void go(size_t v) {
            if (v == content.size()) {
                if (chain.back() != shape) return;
                Tableau t(shape.size());
                for (size_t r = 0; r < shape.size(); ++r) t[r].assign(shape[r], 0);
                for (size_t step = 1; step < chain.size(); ++step) {
                    const Partition& prev = chain[step - 1];
                    const Partition& next = chain[step];
                    for (size_t r = 0; r < next.size(); ++r) {
                        int from = r < prev.size() ? prev[r] : 0;
                        for (int c = from; c < next[r]; ++c) t[r][c] = static_cast<int>(step);
                    }
                }
                out.push_back(t);
                return;
            }
            for (const Partition& e : horizontal_strips(chain.back(), shape, content[v])) {
                chain.push_back(e);
                go(v + 1);
                chain.pop_back();
            }
        }
    };
    Rec rec{shape, content, out, {Partition{}}};
    rec.go(0);
    return out;
}

long kostka(const Partition& shape, const Partition& content) {
    check_partition(shape);
    check_partition(content);
    if (partition_size(shape) != partition_size(content)) return 0;

    struct Rec {
        const Partition& shape;
        const Partition& content;
        long count = 0;
        void go(const Partition& cur, size_t v) {
            if (v == content.size()) {
                if (cur == shape) ++count;
                return;
            }
            for (const Partition& e : horizontal_strips(cur, shape, content[v])) go(e, v + 1);
        }
    };
    Rec rec{shape, content};
    rec.go(Partition{}, 0);
    return rec.count;
}

std::vector<int> reading_word(const Tableau& t) {
    std::vector<int> w;
    for (auto it = t.rbegin(); it != t.rend(); ++it)
        for (int v : *it) w.push_back(v);
    return w;
}

int charge_of_word(std::vector<int> word) {
    int total = 0;
    while (!word.empty()) {
        int maxval = *std::max_element(word.begin(), word.end());
        int pos = -1;
        for (size_t i = 0; i < word.size(); ++i)
            if (word[i] == 1) pos = static_cast<int>(i);
        if (pos < 0) fail(err::BadPartition, "charge needs content with weakly decreasing counts");
        std::vector<int> picked = {pos};
        int index = 0;
        for (int v = 2; v <= maxval; ++v) {
            int found = -1;
            for (int i = pos - 1; i >= 0; --i)
                if (word[i] == v) {
                    found = i;
                    break;
                }
            if (found < 0) {
                for (int i = static_cast<int>(word.size()) - 1; i > pos; --i)
                    if (word[i] == v) {
                        found = i;
                        break;
                    }
            }
            if (found < 0) fail(err::BadPartition, "charge needs content with weakly decreasing counts");
            if (found > pos) index += 1;
            total += index;
            picked.push_back(found);
            pos = found;
        }
        std::sort(picked.begin(), picked.end(), std::greater<int>());
        for (int i : picked) word.erase(word.begin() + i);
    }
    return total;
}

MPoly kostka_foulkes(const Partition& lambda, const Partition& mu) {
    std::vector<int> content(mu.begin(), mu.end());
    MPoly out;
    for (const Tableau& t : ssyt_with_content(lambda, content))
        out.add_term(Mono::var(0, charge_of_word(reading_word(t))), 1);
    return out;
}

} // namespace hh

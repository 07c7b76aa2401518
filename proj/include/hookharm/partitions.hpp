#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hookharm/mpoly.hpp"

namespace hh {

// Weakly decreasing positive parts; the empty vector is the partition of 0.
using Partition = std::vector<int>;

// Throws BadPartition unless parts are positive and weakly decreasing.
void check_partition(const Partition& p);
int partition_size(const Partition& p);

// All partitions of n in descending lexicographic order, so (n) comes first
// and (1^n) last.  This order extends dominance: whenever a dominates b, a is
// listed before b.  max_parts < 0 means unrestricted.
std::vector<Partition> partitions_of(int n, int max_parts = -1);

Partition conjugate(const Partition& p);

// a dominates b: equal size and every partial sum of a is >= that of b.
bool dominates(const Partition& a, const Partition& b);

// sum over rows of (row index) * (row length), rows indexed from 0.
int n_stat(const Partition& p);

// Order of the centralizer of a permutation of cycle type p.
long z_of(const Partition& p);

// Cells of the Young diagram, row-major, as (row, col) pairs from (0, 0).
std::vector<std::pair<int, int>> cells(const Partition& p);
int arm(const Partition& p, int r, int c);
int leg(const Partition& p, int r, int c);

// Display form: parts concatenated ("421") when all fit in one digit,
// comma-separated otherwise; empty partition renders as "0".
std::string partition_str(const Partition& p);
Partition partition_parse(const std::string& s);

// Hook shape (arm | leg) = (arm + 1, 1^leg), a partition of arm + leg + 1.
struct Hook {
    int arm = 0;
    int leg = 0;

    Hook(int a, int b);
    int size() const { return arm + leg + 1; }
    Partition shape() const;
};

bool is_hook(const Partition& p);
Hook hook_of(const Partition& p); // throws BadHook unless is_hook

// Shapes nu with inner <= nu <= outer such that nu/inner is a horizontal
// strip of the given size.
std::vector<Partition> horizontal_strips(const Partition& inner, const Partition& outer, int size);

// Semistandard tableaux: rows of values (1-based), weakly increasing along
// rows and strictly increasing down columns.
using Tableau = std::vector<std::vector<int>>;

// All semistandard tableaux of the given shape whose content is content[i]
// copies of the value i + 1.
std::vector<Tableau> ssyt_with_content(const Partition& shape, const std::vector<int>& content);

// Number of semistandard tableaux of the given shape and content.
long kostka(const Partition& shape, const Partition& content);

// Bottom row first, each row left to right.
std::vector<int> reading_word(const Tableau& t);

// Charge statistic of a word with partition content: repeatedly extract a
// standard subword (rightmost 1, then each next value scanning left with
// cyclic wrap) and sum its index weights.
int charge_of_word(std::vector<int> word);

// Charge generating polynomial (in variable 0) over semistandard tableaux of
// the given shape and content.
MPoly kostka_foulkes(const Partition& lambda, const Partition& mu);

} // namespace hh

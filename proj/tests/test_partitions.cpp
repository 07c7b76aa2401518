#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "hookharm/partitions.hpp"

using namespace hh;

TEST_CASE("partition enumeration counts and order") {
    std::vector<long> counts = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int n = 0; n <= 12; ++n) CHECK(partitions_of(n).size() == counts[n]);
    auto ps = partitions_of(6);
    CHECK(ps.front() == Partition{6});
    CHECK(ps.back() == Partition(6, 1));
    for (size_t i = 1; i < ps.size(); ++i) CHECK(ps[i - 1] > ps[i]); // descending lex
    for (const auto& p : ps) {
        CHECK_NOTHROW(check_partition(p));
        CHECK(partition_size(p) == 6);
    }
    CHECK(partitions_of(6, 2).size() == 4);
    CHECK(partitions_of(0).size() == 1);
}

TEST_CASE("conjugation is an involution and flips hooks") {
    CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
    CHECK(conjugate(Partition{}) == Partition{});
    for (const auto& p : partitions_of(8)) {
        CHECK(conjugate(conjugate(p)) == p);
        CHECK(partition_size(conjugate(p)) == 8);
    }
    CHECK(conjugate(Hook(3, 2).shape()) == Hook(2, 3).shape());
}

TEST_CASE("dominance order") {
    CHECK(dominates(Partition{3, 1}, Partition{2, 2}));
    CHECK_FALSE(dominates(Partition{2, 2}, Partition{3, 1}));
    CHECK(dominates(Partition{2, 2}, Partition{2, 2}));
    CHECK_FALSE(dominates(Partition{3, 3}, Partition{4, 1, 1}));
    CHECK_FALSE(dominates(Partition{4, 1, 1}, Partition{3, 3}));
    CHECK_THROWS_AS(dominates(Partition{2}, Partition{3}), Error);
    // enumeration order extends dominance
    auto ps = partitions_of(7);
    for (size_t i = 0; i < ps.size(); ++i)
        for (size_t j = i + 1; j < ps.size(); ++j) {
            bool later_dominates = dominates(ps[j], ps[i]) && ps[i] != ps[j];
            CHECK_FALSE(later_dominates);
        }
    // conjugation reverses dominance
    for (const auto& a : partitions_of(6))
        for (const auto& b : partitions_of(6))
            CHECK(dominates(a, b) == dominates(conjugate(b), conjugate(a)));
}

TEST_CASE("partition statistics") {
    CHECK(n_stat(Partition{2, 2}) == 2);
    CHECK(n_stat(Partition{1, 1, 1}) == 3);
    CHECK(n_stat(Partition{4}) == 0);
    CHECK(z_of(Partition{1, 1, 1}) == 6);
    CHECK(z_of(Partition{3}) == 3);
    CHECK(z_of(Partition{2, 1}) == 2);
    CHECK(z_of(Partition{2, 2, 1, 1}) == 16);
    for (int n = 1; n <= 9; ++n) {
        // cycle type class sizes partition the symmetric group
        Rat total = 0;
        for (const auto& p : partitions_of(n)) total += Rat(1) / Rat(z_of(p));
        CHECK(total == Rat(1));
    }
}

TEST_CASE("cells arms and legs") {
    Partition p{4, 2, 1};
    CHECK(cells(p).size() == 7);
    CHECK(cells(p).front() == std::pair<int, int>{0, 0});
    CHECK(arm(p, 0, 0) == 3);
    CHECK(leg(p, 0, 0) == 2);
    CHECK(arm(p, 0, 1) == 2);
    CHECK(leg(p, 0, 1) == 1);
    CHECK(arm(p, 1, 0) == 1);
    CHECK(leg(p, 1, 0) == 1);
    CHECK(arm(p, 2, 0) == 0);
    CHECK(leg(p, 2, 0) == 0);
    // hook lengths over the staircase multiply to 9!/(number of standard fillings)
    for (const auto& q : partitions_of(5)) {
        long hooks = 1;
        for (auto [r, c] : cells(q)) hooks *= arm(q, r, c) + leg(q, r, c) + 1;
        CHECK(kostka(q, Partition(5, 1)) * hooks == 120);
    }
}

TEST_CASE("partition display and parse") {
    CHECK(partition_str(Partition{2, 1}) == "21");
    CHECK(partition_str(Partition{}) == "0");
    CHECK(partition_str(Partition{10, 2}) == "10,2");
    CHECK(partition_parse("421") == Partition{4, 2, 1});
    CHECK(partition_parse("10,2") == Partition{10, 2});
    CHECK(partition_parse("0") == Partition{});
    CHECK_THROWS_AS(partition_parse("12"), Error); // increasing, not a partition
    CHECK_THROWS_AS(partition_parse(""), Error);
    CHECK_THROWS_AS(partition_parse("2,x"), Error);
    for (const auto& p : partitions_of(9)) CHECK(partition_parse(partition_str(p)) == p);
}

TEST_CASE("hooks") {
    CHECK(Hook(2, 2).shape() == Partition{3, 1, 1});
    CHECK(Hook(0, 0).shape() == Partition{1});
    CHECK(Hook(3, 2).size() == 6);
    CHECK(is_hook(Partition{3, 1, 1}));
    CHECK_FALSE(is_hook(Partition{2, 2}));
    CHECK_FALSE(is_hook(Partition{}));
    Hook h = hook_of(Partition{3, 1, 1});
    CHECK(h.arm == 2);
    CHECK(h.leg == 2);
    CHECK_THROWS_AS(hook_of(Partition{2, 2}), Error);
    CHECK_THROWS_AS(Hook(-1, 0), Error);
}

TEST_CASE("semistandard tableaux enumeration") {
    CHECK(kostka(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(kostka(Partition{3}, Partition{1, 1, 1}) == 1);
    CHECK(kostka(Partition{1, 1}, Partition{2}) == 0);
    CHECK(kostka(Partition{3, 2}, Partition{2, 2, 1}) == 2);
    for (const auto& p : partitions_of(6)) {
        CHECK(kostka(p, p) == 1);
        // triangularity: zero unless shape dominates content
        for (const auto& q : partitions_of(6))
            if (!dominates(p, q)) CHECK(kostka(p, q) == 0);
    }
    long sum = 0;
    for (const auto& p : partitions_of(5)) {
        long f = kostka(p, Partition(5, 1));
        sum += f * f;
    }
    CHECK(sum == 120);

    auto ts = ssyt_with_content(Partition{3, 2}, {2, 2, 1});
    CHECK(ts.size() == 2);
    for (const auto& t : ts) {
        std::map<int, int> seen;
        for (size_t r = 0; r < t.size(); ++r)
            for (size_t c = 0; c < t[r].size(); ++c) {
                seen[t[r][c]] += 1;
                if (c > 0) CHECK(t[r][c] >= t[r][c - 1]);
                if (r > 0) CHECK(t[r][c] > t[r - 1][c]);
            }
        CHECK(seen[1] == 2);
        CHECK(seen[2] == 2);
        CHECK(seen[3] == 1);
    }
    CHECK(ssyt_with_content(Partition{2}, {1}).empty()); // size mismatch
}

TEST_CASE("reading word and charge") {
    Tableau t = {{1, 1}, {2}};
    CHECK(reading_word(t) == std::vector<int>{2, 1, 1});
    CHECK(charge_of_word({1, 2}) == 1);
    CHECK(charge_of_word({2, 1}) == 0);
    CHECK(charge_of_word({3, 1, 2}) == 2);
    CHECK(charge_of_word({2, 1, 3}) == 1);
    CHECK(charge_of_word({2, 1, 1}) == 0);
    CHECK(charge_of_word({1, 1, 2}) == 1);
    CHECK(charge_of_word({1, 2, 3}) == 3);
    CHECK(charge_of_word({3, 2, 1}) == 0);
    CHECK(charge_of_word({}) == 0);
    CHECK_THROWS_AS(charge_of_word({2, 3}), Error);
}

TEST_CASE("charge generating polynomials") {
    const VarNames Q = VarNames::single("q");
    CHECK(kostka_foulkes(Partition{2}, Partition{1, 1}).str(Q) == "q");
    CHECK(kostka_foulkes(Partition{2, 1}, Partition{1, 1, 1}).str(Q) == "q^2 + q");
    CHECK(kostka_foulkes(Partition{3}, Partition{1, 1, 1}).str(Q) == "q^3");
    CHECK(kostka_foulkes(Partition{1, 1, 1}, Partition{1, 1, 1}).str(Q) == "1");
    CHECK(kostka_foulkes(Partition{2, 2}, Partition{2, 1, 1}).str(Q) == "q");
    CHECK(kostka_foulkes(Partition{1, 1}, Partition{2}).is_zero());
    CHECK(kostka_foulkes(Partition{3, 1}, Partition{2, 1, 1}).str(Q) == "q^2 + q");
    // specializing q = 1 recovers the tableau count
    for (const auto& p : partitions_of(6))
        for (const auto& q : partitions_of(6))
            CHECK(kostka_foulkes(p, q).eval_all({Rat(1)}) == Rat(kostka(p, q)));
}

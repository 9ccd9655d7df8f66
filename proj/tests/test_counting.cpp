#include <doctest.h>

#include "hookmonoid/counting.hpp"
#include "hookmonoid/monoid.hpp"
#include "hookmonoid/oracle.hpp"
#include "hookmonoid/quotient.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

using namespace hookmonoid;
using namespace hookmonoid::oracle;

TEST_CASE("hook type enumeration") {
    auto ks_of = [](const std::vector<HookType>& hs) {
        std::vector<std::vector<long long>> out;
        for (const auto& h : hs) out.push_back(h.ks());
        return out;
    };

    CHECK(ks_of(hooktypes(12, 3)) ==
          std::vector<std::vector<long long>>{{8, 3, 1}, {7, 4, 1}, {6, 4, 2}});
    CHECK(ks_of(hooktypes(13, 1)) == std::vector<std::vector<long long>>{{13}});
    CHECK(ks_of(hooktypes(4, 2)) == std::vector<std::vector<long long>>{{3, 1}});
    CHECK(hooktypes(2, 2).empty());
    CHECK(hooktypes(3, 2).empty());

    CHECK_THROWS_AS(hooktypes(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(hooktypes(5, 0), std::invalid_argument);

    // every enumerated hook type has the requested weight and rank, and the
    // enumeration is complete against a brute-force scan
    for (long long n = 1; n <= 18; ++n) {
        std::vector<std::vector<long long>> seen;
        for (long long r = 1; r * r <= n; ++r)
            for (const auto& h : hooktypes(n, r)) {
                CHECK(h.weight() == n);
                CHECK(h.rank() == r);
                seen.push_back(h.ks());
            }
        std::vector<std::vector<long long>> scanned;
        scan_partitions(n, [&](const PartitionView& v) {
            auto ks = v.hook_type();
            if (std::find(scanned.begin(), scanned.end(), ks) == scanned.end())
                scanned.push_back(ks);
        });
        std::sort(seen.begin(), seen.end());
        std::sort(scanned.begin(), scanned.end());
        CHECK(seen == scanned);
    }
}

TEST_CASE("partitions of one hook type") {
    CHECK(p_hooktype(HookType({7, 4})) == 8);
    CHECK(p_hooktype(HookType({13})) == 13);
    CHECK(p_hooktype(HookType({5, 3, 1})) == 1);   // staircase: only itself
    CHECK(p_hooktype(HookType({9, 3, 1})) == 5);

    for (long long n = 1; n <= 16; ++n)
        for (long long r = 1; r * r <= n; ++r)
            for (const auto& h : hooktypes(n, r))
                CHECK(p_hooktype(h) == count_where(n, HookTypeIs{h}));
}

TEST_CASE("fixed-durfee counts") {
    CHECK(p_nr(7, 2) == 8);
    CHECK(p_nr(13, 2) == 70);
    CHECK(p_nr(4, 2) == 1);
    CHECK(p_nr(5, 3) == 0);
    CHECK(p_nr(9, 3) == 1);

    for (long long n = 1; n <= 24; ++n)
        for (long long r = 1; r <= 4; ++r) {
            const BigInt by_sum = p_nr(n, r, PnrMethod::sum);
            CHECK(by_sum == p_nr(n, r, PnrMethod::recurrence));
            CHECK(by_sum == count_where(n, DurfeeIs{r}));
        }

    CHECK_THROWS_AS(p_nr(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(p_nr(0, 1), std::invalid_argument);
}

TEST_CASE("total counts") {
    CHECK(p_n(13) == 101);
    const std::vector<long long> known = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (long long n = 1; n <= 10; ++n) CHECK(p_n(n) == known[n - 1]);
    CHECK(p_n(50) == 204226);
}

TEST_CASE("closed forms for durfee two and three") {
    CHECK(p_nr_closed(4, 2) == 1);
    CHECK(p_nr_closed(5, 2) == 2);
    CHECK(p_nr_closed(7, 2) == 8);
    CHECK(p_nr_closed(9, 3) == 1);
    CHECK(p_nr_closed(10, 3) == 2);
    CHECK(p_nr_closed(11, 3) == 5);

    for (long long n = 4; n <= 40; ++n) CHECK(p_nr_closed(n, 2) == p_nr(n, 2));
    for (long long n = 9; n <= 40; ++n) CHECK(p_nr_closed(n, 3) == p_nr(n, 3));

    CHECK_THROWS_AS(p_nr_closed(20, 4), std::invalid_argument);
    CHECK_THROWS_AS(p_nr_closed(3, 2), std::invalid_argument);
}

TEST_CASE("decomposition by the trailing square") {
    CHECK(h_r(4, 1) == 5);
    CHECK(h_r(6, 2) == 2);
    CHECK(h_r(7, 2) == 4);
    CHECK(h_r(12, 2) == 50);
    CHECK(h_r(12, 3) == 2);
    CHECK(h_r(5, 2) == 0);
    CHECK(p_n_hdecomp(12) == 77);

    for (long long n = 1; n <= 30; ++n) CHECK(p_n_hdecomp(n) == p_n(n));

    // h_r(n, r) counts partitions by where the difference sequence stops
    // exceeding one: equivalently, by the durfee size of the left factor
    // once the maximal square is peeled off (pure squares land in r = 1)
    for (long long n = 1; n <= 16; ++n) {
        std::map<long long, BigInt> census;
        for (const auto& p : enumerate(n)) {
            const auto [rest, side] = durfee_split(p);
            census[rest.empty() ? 1 : rest.durfee()] += 1;
        }
        for (long long r = 1; r <= n; ++r) {
            const auto it = census.find(r);
            CHECK(h_r(n, r) == (it == census.end() ? BigInt(0) : it->second));
        }
    }
}

TEST_CASE("square-times-hook counts") {
    CHECK(dh(1) == 1);
    CHECK(dh(4) == 5);
    CHECK(dh(12) == 19);
    for (long long n = 1; n <= 25; ++n)
        CHECK(dh(n) == count_where(n, DurfeeTimesHook{}));
    CHECK_THROWS_AS(dh(0), std::invalid_argument);
}

TEST_CASE("counts refined by inner or outer hook size") {
    CHECK(pi_count(15, 3, 3) == 3);
    CHECK(pi_count(5, 1, 5) == 5);
    CHECK(pi_count(5, 1, 4) == 0);
    CHECK(po_count(13, 2, 12) == 10);

    // refining by the inner (or outer) hook size partitions the fixed-durfee
    // census: summing over the hook size recovers p(n, r)
    for (long long n = 1; n <= 16; ++n)
        for (long long r = 1; r * r <= n; ++r) {
            BigInt inner = 0, outer = 0;
            for (long long k = 1; k <= n; ++k) {
                inner += pi_count(n, r, k);
                outer += po_count(n, r, k);
            }
            CHECK(inner == p_nr(n, r));
            CHECK(outer == p_nr(n, r));
        }
}

TEST_CASE("difference sets and weight extremes") {
    CHECK(DifferenceSet({1, 4, 2, 1}).values() == std::vector<long long>{4, 2, 1, 1});
    CHECK_THROWS_AS(DifferenceSet({2, 0}), std::invalid_argument);

    const auto e = weight_extremes(DifferenceSet({4, 2, 1, 1}));
    CHECK(e.min_sequence.ds() == std::vector<long long>{4, 2, 1, 1});
    CHECK(e.max_sequence.ds() == std::vector<long long>{1, 1, 2, 4});
    CHECK(e.min_weight == 21);
    CHECK(e.max_weight == 31);
    CHECK(e.spread == 10);

    const auto f = weight_extremes(DifferenceSet({2, 1}));
    CHECK(f.min_weight == 5);
    CHECK(f.max_weight == 6);
    CHECK(f.spread == 1);

    const auto g = weight_extremes(DifferenceSet({3}));
    CHECK(g.min_weight == 3);
    CHECK(g.max_weight == 3);
    CHECK(g.spread == 0);
}

TEST_CASE("hook types with one boosted difference") {
    auto ks_of = [](const std::vector<HookType>& hs) {
        std::vector<std::vector<long long>> out;
        for (const auto& h : hs) out.push_back(h.ks());
        return out;
    };
    CHECK(ks_of(hooktypes_single_d(4, 2)) ==
          std::vector<std::vector<long long>>{{6, 4}, {6, 1}});
    CHECK(ks_of(hooktypes_single_d(2, 1)) == std::vector<std::vector<long long>>{{2}});
    CHECK_THROWS_AS(hooktypes_single_d(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(hooktypes_single_d(3, 0), std::invalid_argument);
}

TEST_CASE("difference sequences by weight and by class size") {
    auto ds_of = [](const std::vector<DifferenceSequence>& ds) {
        std::vector<std::vector<long long>> out;
        for (const auto& d : ds) out.push_back(d.ds());
        return out;
    };
    CHECK(ds_of(deltas_of_weight(13)) ==
          std::vector<std::vector<long long>>{
              {13}, {10, 1}, {8, 2}, {6, 3}, {4, 4}, {2, 5},
              {5, 1, 1}, {3, 2, 1}, {1, 3, 1}, {2, 1, 2}});

    const auto groups = classes_by_product(23);
    BigInt previous = 0;
    bool found_eight = false;
    for (const auto& [card, deltas] : groups) {
        CHECK(card > previous);   // ascending, no duplicate keys
        previous = card;
        for (const auto& d : deltas) {
            CHECK(delta_weight(d) == 23);
            CHECK(class_cardinality(d) == card);
        }
        if (card == 8) {
            found_eight = true;
            const auto flat = ds_of(deltas);
            for (const auto& want : std::vector<std::vector<long long>>{
                     {4, 1, 1, 2}, {2, 4, 1, 1}, {2, 2, 1, 2}, {8, 1, 1, 1}})
                CHECK(std::find(flat.begin(), flat.end(), want) != flat.end());
        }
    }
    CHECK(found_eight);
}

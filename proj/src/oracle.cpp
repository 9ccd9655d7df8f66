#include "hookmonoid/oracle.hpp"

#include <algorithm>

namespace hookmonoid::oracle {

std::vector<long long> PartitionView::to_parts() const {
    std::vector<long long> parts(head.begin(), head.end());
    parts.insert(parts.end(), static_cast<std::size_t>(ones), 1);
    return parts;
}

std::vector<long long> PartitionView::hook_type() const {
    const long long r = durfee();
    std::vector<long long> ks(static_cast<std::size_t>(r));
    for (long long i = 1; i <= r; ++i)
        ks[static_cast<std::size_t>(i - 1)] = part(i - 1) + conj_part(i) - 2 * i + 1;
    return ks;
}

std::vector<Partition> enumerate(long long n) {
    std::vector<Partition> result;
    for_each_partition(n, [&](std::span<const long long> parts) {
        result.emplace_back(std::vector<long long>(parts.begin(), parts.end()));
    });
    return result;
}

namespace {

// delta_i = 1 for all i < durfee, i.e. the partition is a Durfee square
// (possibly empty) times a 1-hook. Equivalent, cheap form: the first r parts
// are equal and no part is smaller than r.
bool is_durfee_times_hook(const PartitionView& v) {
    const long long r = v.durfee();
    if (r == 0) return false;
    return v.part(0) == v.part(r - 1) && v.smallest() >= r;
}

template <class Pred>
BigInt count_matching(long long n, Pred&& pred) {
    long long matches = 0;
    scan_partitions(n, [&](const PartitionView& v) {
        if (pred(v)) ++matches;
    });
    return matches;
}

} // namespace

BigInt count_where(long long n, const Filter& filter) {
    return std::visit(
        [&](const auto& f) -> BigInt {
            using F = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<F, DurfeeIs>) {
                return count_matching(n, [&](const PartitionView& v) { return v.durfee() == f.r; });
            } else if constexpr (std::is_same_v<F, HookTypeIs>) {
                return count_matching(n, [&](const PartitionView& v) {
                    return v.durfee() == f.value.rank() && v.hook_type() == f.value.ks();
                });
            } else if constexpr (std::is_same_v<F, DiffSetIs>) {
                return count_matching(n, [&](const PartitionView& v) {
                    if (v.durfee() != static_cast<long long>(f.sorted_desc.size())) return false;
                    auto ds = delta_of(HookType(v.hook_type())).ds();
                    std::sort(ds.begin(), ds.end(), std::greater<>());
                    return ds == f.sorted_desc;
                });
            } else if constexpr (std::is_same_v<F, InnerHookIs>) {
                return count_matching(n, [&](const PartitionView& v) {
                    const long long r = v.durfee();
                    if (r == 0) return false;
                    return v.part(r - 1) + v.conj_part(r) - 2 * r + 1 == f.k;
                });
            } else if constexpr (std::is_same_v<F, OuterHookIs>) {
                return count_matching(n, [&](const PartitionView& v) {
                    return v.count() > 0 && v.part(0) + v.count() - 1 == f.k;
                });
            } else if constexpr (std::is_same_v<F, DurfeeTimesHook>) {
                return count_matching(n, [](const PartitionView& v) { return is_durfee_times_hook(v); });
            } else {
                static_assert(std::is_same_v<F, PartsPm1Mod5>);
                return count_matching(n, [](const PartitionView& v) {
                    for (long long p : v.head) {
                        const long long m = p % 5;
                        if (m != 1 && m != 4) return false;
                    }
                    return true; // trailing 1s are congruent to 1
                });
            }
        },
        filter);
}

BigInt count_all(long long n) {
    return count_matching(n, [](const PartitionView&) { return true; });
}

std::vector<BigInt> pentagonal_table(long long n) {
    if (n < 0) throw std::invalid_argument("pentagonal_table: negative bound");
    std::vector<BigInt> p(static_cast<std::size_t>(n) + 1);
    p[0] = 1;
    for (long long m = 1; m <= n; ++m) {
        BigInt total = 0;
        for (long long k = 1;; ++k) {
            const long long g1 = k * (3 * k - 1) / 2;
            const long long g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            const BigInt& a = p[static_cast<std::size_t>(m - g1)];
            const BigInt b = g2 <= m ? p[static_cast<std::size_t>(m - g2)] : BigInt(0);
            if (k % 2 == 1) total += a + b; else total -= a + b;
        }
        p[static_cast<std::size_t>(m)] = total;
    }
    return p;
}

} // namespace hookmonoid::oracle

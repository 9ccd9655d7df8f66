#pragma once

#include <span>
#include <variant>
#include <vector>

#include "hookmonoid/partition.hpp"

namespace hookmonoid::oracle {

// Brute-force ground truth: stream every partition of n and count what
// matches. Everything here is definition-level (no formulas from the rest of
// the library), so the counting and series modules can be validated against it.

// Lightweight view of one partition during a scan: the parts >= 2 live in
// `head` (descending), trailing 1s are carried as a count. Nothing allocates
// per partition.
struct PartitionView {
    std::span<const long long> head;
    long long ones = 0;

    long long count() const { return static_cast<long long>(head.size()) + ones; }

    long long part(long long i) const {
        return i < static_cast<long long>(head.size()) ? head[i] : 1;
    }

    long long smallest() const { return ones > 0 ? 1 : (head.empty() ? 0 : head.back()); }

    // Conjugate part lambda'_i = #{j : lambda_j >= i}, i >= 1.
    long long conj_part(long long i) const {
        long long c = (i == 1) ? ones : 0;
        // head is descending, so parts >= i form a prefix
        long long lo = 0, hi = static_cast<long long>(head.size());
        while (lo < hi) {
            long long mid = (lo + hi) / 2;
            if (head[static_cast<std::size_t>(mid)] >= i) lo = mid + 1; else hi = mid;
        }
        return c + lo;
    }

    long long durfee() const {
        const long long hs = static_cast<long long>(head.size());
        for (long long i = 0; i < hs; ++i)
            if (head[static_cast<std::size_t>(i)] < i + 1) return i;
        if (hs == 0) return ones > 0 ? 1 : 0;
        return hs;
    }

    std::vector<long long> to_parts() const;
    std::vector<long long> hook_type() const; // sizes of the central hooks
};

// Streams the partitions of n in reverse-lexicographic order via an in-place
// successor: pop the last part p >= 2, write p-1, refill greedily. Trailing 1s
// never enter the buffer, which keeps the step cost flat.
template <class Visit>
void scan_partitions(long long n, Visit&& visit) {
    if (n < 0) throw std::invalid_argument("scan_partitions: negative weight");
    if (n == 0) {
        visit(PartitionView{{}, 0});
        return;
    }
    std::vector<long long> head;
    head.reserve(static_cast<std::size_t>(n / 2 + 1));
    long long ones = 0;
    if (n == 1) ones = 1; else head.push_back(n);
    for (;;) {
        visit(PartitionView{std::span<const long long>(head), ones});
        if (head.empty()) return;
        const long long p = head.back();
        head.pop_back();
        const long long total = p + ones;
        const long long q = p - 1;
        if (q == 1) {
            ones = total;
            continue;
        }
        const long long copies = total / q;
        const long long rest = total % q;
        head.insert(head.end(), static_cast<std::size_t>(copies), q);
        if (rest >= 2) {
            head.push_back(rest);
            ones = 0;
        } else {
            ones = rest;
        }
    }
}

// Recursive max-part-bound walk, materializing the parts for the caller.
// Same reverse-lexicographic order as scan_partitions.
template <class Visit>
void for_each_partition(long long n, Visit&& visit) {
    if (n < 0) throw std::invalid_argument("for_each_partition: negative weight");
    std::vector<long long> parts;
    parts.reserve(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, long long remaining, long long cap) -> void {
        if (remaining == 0) {
            visit(std::span<const long long>(parts));
            return;
        }
        for (long long p = std::min(remaining, cap); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
}

std::vector<Partition> enumerate(long long n);

// Filters for count_where.
struct DurfeeIs { long long r; };
struct HookTypeIs { HookType value; };
struct DiffSetIs { std::vector<long long> sorted_desc; };
struct InnerHookIs { long long k; };
struct OuterHookIs { long long k; };
struct DurfeeTimesHook {};   // partition = (Durfee square) * (1-hook), square may be empty
struct PartsPm1Mod5 {};      // every part is congruent to 1 or 4 mod 5

using Filter = std::variant<DurfeeIs, HookTypeIs, DiffSetIs, InnerHookIs, OuterHookIs,
                            DurfeeTimesHook, PartsPm1Mod5>;

BigInt count_where(long long n, const Filter& filter);

BigInt count_all(long long n);

// Independent cross-check for the enumerator itself: p(0..n) by the pentagonal
// number recurrence.
std::vector<BigInt> pentagonal_table(long long n);

} // namespace hookmonoid::oracle

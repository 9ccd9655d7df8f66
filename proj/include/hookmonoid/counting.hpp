#pragma once

#include <utility>
#include <vector>

#include "hookmonoid/partition.hpp"

namespace hookmonoid {

// Closed-form, recursive and enumerative counting of partitions by hook data.

// Multiset of difference entries, stored weakly decreasing.
class DifferenceSet {
public:
    DifferenceSet() = default;
    explicit DifferenceSet(std::vector<long long> values); // sorts descending

    const std::vector<long long>& values() const { return values_; }
    long long size() const { return static_cast<long long>(values_.size()); }

    friend bool operator==(const DifferenceSet&, const DifferenceSet&) = default;

private:
    std::vector<long long> values_;
};

// Number of partitions with hook type exactly h: k_r * prod_i (k_i - k_{i+1} - 1).
BigInt p_hooktype(const HookType& h);

// All hook types of weight n with exactly r hooks, lexicographically decreasing.
// Empty when no such hook type exists (in particular when r^2 > n).
std::vector<HookType> hooktypes(long long n, long long r);

enum class PnrMethod { sum, recurrence };

// Number of partitions of n with Durfee size r.
// sum:        total of p_hooktype over hooktypes(n, r).
// recurrence: p(n,1) = n;  p(n,r) = sum_{k>=1} k * p(n - (k+1)r + 1, r - 1),
//             k up to (n - r(r-1)) / r  (k is the size of the inner hook).
BigInt p_nr(long long n, long long r, PnrMethod method = PnrMethod::sum);

// p(n) as the sum of p_nr over r = 1..floor(sqrt(n)).
BigInt p_n(long long n);

// Closed forms for r = 2 and r = 3, evaluated in exact rationals with an
// integrality assertion. Requires n >= r^2.
BigInt p_nr_closed(long long n, long long r);

// Number of partitions of n whose hook part has exactly r hooks once the
// maximal Durfee-square right factor is split off; for r = 1 the hook part is
// any 1-hook, for r >= 2 its inner hook has size >= 2 (h_r(n) = 0 for n < 6
// when r = 2). For r = 2, n >= 6 a closed form is evaluated and asserted equal.
BigInt h_r(long long n, long long r);

// p(n) recomposed as sum_r h_r(n).
BigInt p_n_hdecomp(long long n);

// Number of partitions of n of the shape (Durfee square) * (1-hook), square of
// any size >= 0: sum over divisors x <= sqrt(n) of (n/x - x + 1).
BigInt dh(long long n);

// Partitions of n with Durfee size r whose inner hook has size exactly k.
// Computed two ways (hook-type filter, and k * p(n-(k+1)r+1, r-1) for r >= 2)
// and cross-asserted.
BigInt pi_count(long long n, long long r, long long k);

// Partitions of n with Durfee size r whose outer hook has size exactly k.
BigInt po_count(long long n, long long r, long long k);

struct WeightExtremes {
    DifferenceSequence min_sequence;
    DifferenceSequence max_sequence;
    BigInt min_weight;
    BigInt max_weight;
    BigInt spread;
};

// Over all arrangements of the multiset: descending minimizes the class
// weight, ascending maximizes it, and the spread is sum_{i<j} (d_i - d_j)
// taken on the descending arrangement.
WeightExtremes weight_extremes(const DifferenceSet& set);

// The r hook types whose difference multiset is {d, 1^(r-1)} (d >= 2):
// delta = (1^(r-s-1), d, 1^s) for s = 0..r-1, of weight r^2 + (r-s)(d-1).
std::vector<HookType> hooktypes_single_d(long long d, long long r);

// All difference sequences of weight n (every rank), table order.
std::vector<DifferenceSequence> deltas_of_weight(long long n);

// Classes of weight n grouped by cardinality, ascending by cardinality;
// sequences inside a group keep the table order.
std::vector<std::pair<BigInt, std::vector<DifferenceSequence>>>
classes_by_product(long long n);

} // namespace hookmonoid

#include "hookmonoid/counting.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "hookmonoid/quotient.hpp"

namespace hookmonoid {

namespace {

void require_positive(long long value, const char* what) {
    if (value < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

// Sum of prod_j d_j over tuples (d_i,...,d_r) with d_j >= 1 for j < r,
// d_r >= 2 and sum_j j*d_j = m.
BigInt prefix_core_sum(long long i, long long r, long long m) {
    if (i == r) return (m % r == 0 && m / r >= 2) ? BigInt(m / r) : BigInt(0);
    long long min_rest = 2 * r;
    for (long long j = i + 1; j < r; ++j) min_rest += j;
    BigInt total = 0;
    for (long long d = 1; i * d <= m - min_rest; ++d)
        total += BigInt(d) * prefix_core_sum(i + 1, r, m - i * d);
    return total;
}

} // namespace

DifferenceSet::DifferenceSet(std::vector<long long> values) : values_(std::move(values)) {
    for (long long v : values_)
        if (v < 1) throw std::invalid_argument("difference entries must be >= 1");
    std::sort(values_.begin(), values_.end(), std::greater<>());
}

BigInt p_hooktype(const HookType& h) {
    return class_cardinality(delta_of(h));
}

std::vector<HookType> hooktypes(long long n, long long r) {
    require_positive(n, "hooktypes: weight");
    require_positive(r, "hooktypes: rank");
    std::vector<HookType> out;
    std::vector<long long> ks(static_cast<std::size_t>(r));
    // Entry i gets the largest feasible value first, so the output is
    // lexicographically decreasing. With j entries still to place and m weight
    // left, a choice k is feasible iff (j-1)^2 <= m - k <= (j-1)(k-j).
    auto place = [&](auto&& self, long long i, long long m, long long cap) -> void {
        const long long j = r - i;
        if (j == 0) {
            if (m == 0) out.emplace_back(ks);
            return;
        }
        const long long hi = std::min(cap, m - (j - 1) * (j - 1));
        const long long lo = std::max((m + j * (j - 1) + j - 1) / j, 2 * j - 1);
        for (long long k = hi; k >= lo; --k) {
            ks[static_cast<std::size_t>(i)] = k;
            self(self, i + 1, m - k, k - 2);
        }
    };
    place(place, 0, n, n);
    return out;
}

BigInt p_nr(long long n, long long r, PnrMethod method) {
    require_positive(n, "p_nr: weight");
    require_positive(r, "p_nr: rank");
    if (r * r > n) return 0;
    if (method == PnrMethod::sum) {
        BigInt total = 0;
        for (const HookType& h : hooktypes(n, r)) total += p_hooktype(h);
        return total;
    }
    if (r == 1) return n;
    // Peel the inner hook: k choices of the hook itself, the rest is a
    // partition of n - (k+1)r + 1 with Durfee size r - 1.
    BigInt total = 0;
    for (long long k = 1; k * r <= n - r * (r - 1); ++k)
        total += BigInt(k) * p_nr(n - (k + 1) * r + 1, r - 1, PnrMethod::recurrence);
    return total;
}

BigInt p_n(long long n) {
    require_positive(n, "p_n: weight");
    BigInt total = 0;
    for (long long r = 1; r * r <= n; ++r) total += p_nr(n, r);
    return total;
}

BigInt p_nr_closed(long long n, long long r) {
    if (r != 2 && r != 3)
        throw std::invalid_argument("p_nr_closed: only r = 2 and r = 3 have closed forms");
    if (n < r * r)
        throw std::invalid_argument("p_nr_closed: requires n >= r^2");
    if (r == 2) {
        BigRat value = BigRat(binomial(n, 3), BigInt(4));
        if (n % 2 == 1) value -= BigRat(BigInt(n - 1), BigInt(8));
        return require_integral(value, "p_nr_closed, r = 2");
    }
    const BigInt m = n;
    BigRat value(BigInt((m + 1) * (m - 5)) * (3 * m * m * m - 33 * m * m + 83 * m - 13),
                 BigInt(12960));
    switch (n % 6) {
    case 0: value += BigRat(3 * m - 8, BigInt(81)) - BigRat(m - 3, BigInt(32)); break;
    case 1: value += BigRat(BigInt(2), BigInt(81)); break;
    case 2: value -= BigRat(m - 3, BigInt(32)); break;
    case 3: value += BigRat(3 * m - 8, BigInt(81)); break;
    case 4: value += BigRat(BigInt(2), BigInt(81)) - BigRat(m - 3, BigInt(32)); break;
    default: break;
    }
    return require_integral(value, "p_nr_closed, r = 3");
}

BigInt h_r(long long n, long long r) {
    require_positive(n, "h_r: weight");
    require_positive(r, "h_r: rank");
    if (r == 1) {
        // Difference sequences (d, 1^(s)) of weight n: one for each square
        // size s+1 = j <= sqrt(n), contributing d = n - j^2 + 1 partitions.
        BigInt total = 0;
        for (long long j = 1; j * j <= n; ++j) total += n - j * j + 1;
        return total;
    }
    // Difference sequences (d_1,...,d_r,1^s) with d_r >= 2, summed over s.
    BigInt total = 0;
    for (long long s = 0;; ++s) {
        const long long full = r + s;
        const long long base = (full * (full + 1) / 2 - r * (r + 1) / 2)
                               + full * (full - 1) / 2;
        const long long m = n - base;
        if (m < r * (r + 3) / 2) break;
        total += prefix_core_sum(1, r, m);
    }
    if (r == 2 && n >= 6) {
        BigRat closed = 0;
        for (long long j = 2; j * j <= n - 2; ++j) {
            const long long c = n - j * j;
            closed += BigRat(binomial(c + 4, 3), BigInt(4));
            if ((j + n) % 2 == 1) closed -= BigRat(BigInt(c + 3), BigInt(8));
            closed -= c + 1;
        }
        if (require_integral(closed, "h_r closed form, r = 2") != total)
            throw ConsistencyError("h_r: closed form disagrees with enumeration at n = "
                                   + std::to_string(n));
    }
    return total;
}

BigInt p_n_hdecomp(long long n) {
    require_positive(n, "p_n_hdecomp: weight");
    BigInt total = h_r(n, 1);
    for (long long r = 2; r * r + r <= n; ++r) total += h_r(n, r);
    return total;
}

BigInt dh(long long n) {
    require_positive(n, "dh: weight");
    BigInt total = 0;
    for (long long x = 1; x * x <= n; ++x)
        if (n % x == 0) total += n / x - x + 1;
    return total;
}

BigInt pi_count(long long n, long long r, long long k) {
    require_positive(n, "pi_count: weight");
    require_positive(r, "pi_count: rank");
    require_positive(k, "pi_count: hook size");
    BigInt filtered = 0;
    for (const HookType& h : hooktypes(n, r))
        if (h.ks().back() == k) filtered += p_hooktype(h);
    BigInt peeled;
    if (r == 1) {
        peeled = n == k ? BigInt(k) : BigInt(0);
    } else {
        const long long rest = n - (k + 1) * r + 1;
        peeled = rest >= 1 ? BigInt(k) * p_nr(rest, r - 1) : BigInt(0);
    }
    if (filtered != peeled)
        throw ConsistencyError("pi_count: filter and peel routes disagree at n = "
                               + std::to_string(n) + ", r = " + std::to_string(r)
                               + ", k = " + std::to_string(k));
    return filtered;
}

BigInt po_count(long long n, long long r, long long k) {
    require_positive(n, "po_count: weight");
    require_positive(r, "po_count: rank");
    require_positive(k, "po_count: hook size");
    BigInt total = 0;
    for (const HookType& h : hooktypes(n, r))
        if (h.ks().front() == k) total += p_hooktype(h);
    return total;
}

WeightExtremes weight_extremes(const DifferenceSet& set) {
    std::vector<long long> descending = set.values();
    std::vector<long long> ascending(descending.rbegin(), descending.rend());
    WeightExtremes ex;
    ex.min_sequence = DifferenceSequence(descending);
    ex.max_sequence = DifferenceSequence(ascending);
    ex.min_weight = delta_weight(ex.min_sequence);
    ex.max_weight = delta_weight(ex.max_sequence);
    ex.spread = ex.max_weight - ex.min_weight;
    BigInt pairwise = 0;
    for (std::size_t i = 0; i < descending.size(); ++i)
        for (std::size_t j = i + 1; j < descending.size(); ++j)
            pairwise += descending[i] - descending[j];
    if (pairwise != ex.spread)
        throw ConsistencyError("weight_extremes: spread differs from the pairwise sum");
    return ex;
}

std::vector<HookType> hooktypes_single_d(long long d, long long r) {
    if (d < 2) throw std::invalid_argument("hooktypes_single_d: d must be >= 2");
    require_positive(r, "hooktypes_single_d: rank");
    std::vector<HookType> out;
    out.reserve(static_cast<std::size_t>(r));
    for (long long s = 0; s < r; ++s) {
        std::vector<long long> ks(static_cast<std::size_t>(r));
        for (long long i = 1; i <= r; ++i)
            ks[static_cast<std::size_t>(i - 1)] =
                i <= r - s ? 2 * (r - i) + d : 2 * (r - i) + 1;
        HookType h{std::move(ks)};
        std::vector<long long> ds(static_cast<std::size_t>(r), 1);
        ds[static_cast<std::size_t>(r - s - 1)] = d;
        if (hooktype_of(DifferenceSequence(std::move(ds))) != h
            || h.weight() != r * r + (r - s) * (d - 1))
            throw ConsistencyError("hooktypes_single_d: closed form broke at s = "
                                   + std::to_string(s));
        out.push_back(std::move(h));
    }
    return out;
}

std::vector<DifferenceSequence> deltas_of_weight(long long n) {
    require_positive(n, "deltas_of_weight: weight");
    std::vector<DifferenceSequence> out;
    for (long long r = 1; r * r <= n; ++r)
        for (const HookType& h : hooktypes(n, r)) out.push_back(delta_of(h));
    return out;
}

std::vector<std::pair<BigInt, std::vector<DifferenceSequence>>>
classes_by_product(long long n) {
    std::map<BigInt, std::vector<DifferenceSequence>> groups;
    for (DifferenceSequence& d : deltas_of_weight(n)) {
        BigInt card = class_cardinality(d);
        groups[card].push_back(std::move(d));
    }
    return {groups.begin(), groups.end()};
}

} // namespace hookmonoid

#pragma once

#include <utility>
#include <vector>

#include "hookmonoid/partition.hpp"

namespace hookmonoid {

// The partition product and its unique factorization into 1-hooks. Partitions
// form a free monoid under this product, generated by the 1-hooks, with the
// empty partition as two-sided identity.

// A 1-hook: arm cells to the right of the corner, leg cells below it.
// As a partition it is (arm+1, 1^leg), of size arm + leg + 1.
struct Hook1 {
    Hook1() = default;
    Hook1(long long arm_in, long long leg_in);

    long long arm = 0;
    long long leg = 0;

    long long size() const { return arm + leg + 1; }
    Partition to_partition() const;

    friend bool operator==(const Hook1&, const Hook1&) = default;
    friend auto operator<=>(const Hook1&, const Hook1&) = default;
};

// a * b: every central hook of `a` is enlarged by the first row and first
// column of `b`, and `b`'s hooks slide in below/right of them. On Frobenius
// symbols: arms(a)+b_1 followed by arms(b), legs(a)+len(b) followed by legs(b).
Partition product(const Partition& a, const Partition& b);

// Splits off the innermost central hook: p = q * h with h a 1-hook.
// Throws std::invalid_argument on the empty partition.
std::pair<Partition, Hook1> peel_inner(const Partition& p);

// Unique factorization into 1-hooks, outermost factor first. The sizes of the
// factors read off the difference sequence of p. factor(empty) = {}.
std::vector<Hook1> factor(const Partition& p);

Partition product_of_hooks(const std::vector<Hook1>& hooks);

// The s x s square partition (s >= 0).
Partition durfee_square(long long s);

// Maximal split p = q * durfee_square(s); s is the length of the trailing run
// of 1s in the difference sequence (q = empty when p is itself a square).
std::pair<Partition, long long> durfee_split(const Partition& p);

} // namespace hookmonoid

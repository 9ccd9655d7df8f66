#pragma once

#include <array>
#include <vector>

#include "hookmonoid/partition.hpp"

namespace hookmonoid {

// The quotient of the partition monoid by "same hook type", its three
// equivalent index sets with conversions, and two matrix representations.

enum class IndexSet { hooktype, delta, pi };

// Converts a class label between the three index sets for weight n, validating
// membership on the way in. The pi form is a weakly decreasing tuple of length
// r (trailing zeros significant) summing to n - r^2.
std::vector<long long> index_convert(const std::vector<long long>& value,
                                     IndexSet from, IndexSet to, long long n);

// The quotient product in each coordinate system.
DifferenceSequence delta_product(const DifferenceSequence& a, const DifferenceSequence& b);
HookType hooktype_product(const HookType& a, const HookType& b);
BoundedPartition pi_product(const BoundedPartition& a, const BoundedPartition& b);

// Number of partitions in the class: the product of the difference entries.
// Multiplicative for the quotient product; 1 exactly on the Durfee squares.
BigInt class_cardinality(const DifferenceSequence& d);

enum class TriShape { lower, upper };

// Unit-triangular 3x3 matrix over unbounded integers.
class TriangularMatrix3 {
public:
    TriangularMatrix3(std::array<BigInt, 9> entries, TriShape shape);

    static TriangularMatrix3 identity(TriShape shape);

    const BigInt& at(int row, int col) const;
    TriShape shape() const { return shape_; }

    friend TriangularMatrix3 operator*(const TriangularMatrix3& a, const TriangularMatrix3& b);
    friend bool operator==(const TriangularMatrix3&, const TriangularMatrix3&) = default;

private:
    std::array<BigInt, 9> e_;
    TriShape shape_;
};

// Lower unit-triangular representation of a partition:
//   [[1,0,0], [outer_hook_size+1,1,0], [weight,durfee,1]]
// (the middle entry is 0 for the empty partition). Monoid homomorphism.
TriangularMatrix3 phi3(const Partition& p);

// Upper unit-triangular representation of a class by its difference sequence:
//   [[1, r, sum i*d_i], [0, 1, sum d_i], [0,0,1]].
// Homomorphism from the quotient monoid under concatenation.
TriangularMatrix3 phi4(const DifferenceSequence& d);

// Number of classes of weight n; equals the number of partitions of n into
// parts congruent to +-1 mod 5 (first Rogers-Ramanujan identity).
BigInt class_count(long long n);

struct CongruenceClass {
    HookType hooktype;
    DifferenceSequence delta;
    BoundedPartition pi;
    BigInt cardinality;
};

// All classes of weight n, ordered by rank then lexicographically decreasing
// hook type (the table order).
std::vector<CongruenceClass> classes_of(long long n);

} // namespace hookmonoid

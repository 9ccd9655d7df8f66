#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "hookmonoid/numeric.hpp"

namespace hookmonoid {

// Core value types for the hook calculus: partitions, their Frobenius symbols,
// hook types (sizes of the central hooks) and difference sequences. All types
// are immutable after construction and validate their invariants up front.

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long long> parts);

    // Comma-separated parts, e.g. "4,4,2,1". "" and "0" denote the empty partition.
    static Partition parse(const std::string& text);
    std::string to_string() const;

    const std::vector<long long>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    long long weight() const;
    long long durfee() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<long long> parts_;
};

// Arms and legs of the central hooks; both strictly decreasing, non-negative.
struct FrobeniusSymbol {
    FrobeniusSymbol() = default;
    FrobeniusSymbol(std::vector<long long> arms_in, std::vector<long long> legs_in);

    std::vector<long long> arms;
    std::vector<long long> legs;

    long long rank() const { return static_cast<long long>(arms.size()); }

    friend bool operator==(const FrobeniusSymbol&, const FrobeniusSymbol&) = default;
};

// Sizes (k_1,...,k_r) of the central hooks; k_i >= k_{i+1} + 2, k_r >= 1.
// The empty tuple is allowed and stands for the class of the empty partition.
class HookType {
public:
    HookType() = default;
    explicit HookType(std::vector<long long> ks);

    const std::vector<long long>& ks() const { return ks_; }
    long long rank() const { return static_cast<long long>(ks_.size()); }
    long long weight() const;

    friend bool operator==(const HookType&, const HookType&) = default;
    friend auto operator<=>(const HookType&, const HookType&) = default;

private:
    std::vector<long long> ks_;
};

// Difference sequence (d_1,...,d_r) of a hook type: d_i = k_i - k_{i+1} - 1,
// d_r = k_r; every entry is >= 1. Empty = class of the empty partition.
class DifferenceSequence {
public:
    DifferenceSequence() = default;
    explicit DifferenceSequence(std::vector<long long> ds);

    const std::vector<long long>& ds() const { return ds_; }
    long long rank() const { return static_cast<long long>(ds_.size()); }

    friend bool operator==(const DifferenceSequence&, const DifferenceSequence&) = default;
    friend auto operator<=>(const DifferenceSequence&, const DifferenceSequence&) = default;

private:
    std::vector<long long> ds_;
};

// Weakly decreasing tuple with zeros allowed; the length is part of the value
// (members of the third index set carry trailing zeros up to their rank).
class BoundedPartition {
public:
    BoundedPartition() = default;
    explicit BoundedPartition(std::vector<long long> mus);

    const std::vector<long long>& mus() const { return mus_; }
    long long rank() const { return static_cast<long long>(mus_.size()); }
    long long sum() const;

    friend bool operator==(const BoundedPartition&, const BoundedPartition&) = default;
    friend auto operator<=>(const BoundedPartition&, const BoundedPartition&) = default;

private:
    std::vector<long long> mus_;
};

Partition conjugate(const Partition& p);

FrobeniusSymbol to_frobenius(const Partition& p);
Partition from_frobenius(const FrobeniusSymbol& f);

// Hook type of a non-empty partition; throws std::invalid_argument on the
// empty partition (it has no central hooks).
HookType hook_type(const Partition& p);

// Size of the outermost central hook, = lambda_1 + (number of parts) - 1.
long long outer_hook_size(const Partition& p);
long long inner_hook_size(const Partition& p);

DifferenceSequence delta_of(const HookType& h);
HookType hooktype_of(const DifferenceSequence& d);

// |d| = sum_i i*d_i + C(r,2); the weight of every partition in the class.
BigInt delta_weight(const DifferenceSequence& d);

enum class RenderOrientation { english, cartesian };

// ASCII Ferrers diagram. English orientation puts the largest row on top;
// cartesian lists rows bottom-to-top. With mark_hooks each central hook is
// drawn with its own character ('1'..'9', cycling beyond nine hooks).
std::string render(const Partition& p,
                   RenderOrientation orientation = RenderOrientation::english,
                   bool mark_hooks = false);

std::string format_tuple(const std::vector<long long>& values);

} // namespace hookmonoid

#include "hookmonoid/monoid.hpp"

#include <algorithm>

namespace hookmonoid {

Hook1::Hook1(long long arm_in, long long leg_in) : arm(arm_in), leg(leg_in) {
    if (arm < 0 || leg < 0)
        throw std::invalid_argument("hook arm and leg must be non-negative");
}

Partition Hook1::to_partition() const {
    std::vector<long long> parts;
    parts.reserve(static_cast<std::size_t>(leg) + 1);
    parts.push_back(arm + 1);
    parts.insert(parts.end(), static_cast<std::size_t>(leg), 1);
    return Partition(std::move(parts));
}

Partition product(const Partition& a, const Partition& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    const FrobeniusSymbol fa = to_frobenius(a);
    const FrobeniusSymbol fb = to_frobenius(b);
    // every hook of `a` grows by the first row and first column of `b`;
    // the hooks of `b` keep their arms and legs and slide in after them
    const long long row_shift = b.parts()[0];
    const long long col_shift = static_cast<long long>(b.parts().size());
    std::vector<long long> arms;
    std::vector<long long> legs;
    arms.reserve(fa.arms.size() + fb.arms.size());
    legs.reserve(arms.capacity());
    for (long long arm : fa.arms) arms.push_back(arm + row_shift);
    for (long long arm : fb.arms) arms.push_back(arm);
    for (long long leg : fa.legs) legs.push_back(leg + col_shift);
    for (long long leg : fb.legs) legs.push_back(leg);
    return from_frobenius(FrobeniusSymbol(std::move(arms), std::move(legs)));
}

std::pair<Partition, Hook1> peel_inner(const Partition& p) {
    if (p.empty())
        throw std::invalid_argument("cannot peel a hook off the empty partition");
    FrobeniusSymbol f = to_frobenius(p);
    const Hook1 inner(f.arms.back(), f.legs.back());
    std::vector<long long> arms(f.arms.begin(), f.arms.end() - 1);
    std::vector<long long> legs(f.legs.begin(), f.legs.end() - 1);
    // undo the shift the inner factor applied to the outer hooks
    for (long long& arm : arms) arm -= inner.arm + 1;
    for (long long& leg : legs) leg -= inner.leg + 1;
    return {from_frobenius(FrobeniusSymbol(std::move(arms), std::move(legs))), inner};
}

std::vector<Hook1> factor(const Partition& p) {
    std::vector<Hook1> hooks;
    Partition rest = p;
    while (!rest.empty()) {
        auto [outer, inner] = peel_inner(rest);
        hooks.push_back(inner);
        rest = std::move(outer);
    }
    std::reverse(hooks.begin(), hooks.end());
    return hooks;
}

Partition product_of_hooks(const std::vector<Hook1>& hooks) {
    Partition result;
    for (auto it = hooks.rbegin(); it != hooks.rend(); ++it)
        result = product(it->to_partition(), result);
    return result;
}

Partition durfee_square(long long s) {
    if (s < 0) throw std::invalid_argument("square size must be non-negative");
    if (s == 0) return Partition{};
    return Partition(std::vector<long long>(static_cast<std::size_t>(s), s));
}

std::pair<Partition, long long> durfee_split(const Partition& p) {
    if (p.empty()) return {Partition{}, 0};
    const auto ds = delta_of(hook_type(p)).ds();
    long long run = 0;
    while (run < static_cast<long long>(ds.size()) &&
           ds[ds.size() - 1 - static_cast<std::size_t>(run)] == 1)
        ++run;
    if (run == static_cast<long long>(ds.size()))
        return {Partition{}, run}; // p is a square
    auto hooks = factor(p);
    hooks.resize(hooks.size() - static_cast<std::size_t>(run));
    return {product_of_hooks(hooks), run};
}

} // namespace hookmonoid

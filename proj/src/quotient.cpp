#include "hookmonoid/quotient.hpp"

#include <algorithm>
#include <sstream>

#include "hookmonoid/counting.hpp"

namespace hookmonoid {

namespace {

void require_weight(long long n, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string(what) + ": weight must be >= 1");
}

HookType as_hooktype(const std::vector<long long>& v, long long n) {
    HookType h{std::vector<long long>(v)};
    if (h.rank() == 0 || h.weight() != n)
        throw std::invalid_argument("not a hook type of weight " + std::to_string(n));
    return h;
}

DifferenceSequence as_delta(const std::vector<long long>& v, long long n) {
    DifferenceSequence d{std::vector<long long>(v)};
    if (d.rank() == 0 || delta_weight(d) != n)
        throw std::invalid_argument("not a difference sequence of weight " + std::to_string(n));
    return d;
}

BoundedPartition as_pi(const std::vector<long long>& v, long long n) {
    BoundedPartition b{std::vector<long long>(v)};
    const long long r = b.rank();
    if (r == 0 || n < r * r || b.sum() != n - r * r)
        throw std::invalid_argument("not a pi-index value of weight " + std::to_string(n));
    return b;
}

BoundedPartition pi_of_hooktype(const HookType& h) {
    const long long r = h.rank();
    std::vector<long long> mus(static_cast<std::size_t>(r));
    for (long long i = 0; i < r; ++i)
        mus[static_cast<std::size_t>(i)] = h.ks()[static_cast<std::size_t>(i)] - (2 * (r - 1 - i) + 1);
    return BoundedPartition(std::move(mus));
}

HookType hooktype_of_pi(const BoundedPartition& b) {
    const long long r = b.rank();
    std::vector<long long> ks(static_cast<std::size_t>(r));
    for (long long i = 0; i < r; ++i)
        ks[static_cast<std::size_t>(i)] = b.mus()[static_cast<std::size_t>(i)] + 2 * (r - 1 - i) + 1;
    return HookType(std::move(ks));
}

BoundedPartition pi_of_delta(const DifferenceSequence& d) {
    const long long r = d.rank();
    std::vector<long long> mus(static_cast<std::size_t>(r));
    long long suffix = 0;
    for (long long i = r - 1; i >= 0; --i) {
        suffix += d.ds()[static_cast<std::size_t>(i)] - 1;
        mus[static_cast<std::size_t>(i)] = suffix;
    }
    return BoundedPartition(std::move(mus));
}

DifferenceSequence delta_of_pi(const BoundedPartition& b) {
    const long long r = b.rank();
    std::vector<long long> ds(static_cast<std::size_t>(r));
    for (long long i = 0; i < r; ++i) {
        const long long mu = b.mus()[static_cast<std::size_t>(i)];
        ds[static_cast<std::size_t>(i)] =
            i + 1 < r ? mu - b.mus()[static_cast<std::size_t>(i + 1)] + 1 : mu + 1;
    }
    return DifferenceSequence(std::move(ds));
}

} // namespace

std::vector<long long> index_convert(const std::vector<long long>& value,
                                     IndexSet from, IndexSet to, long long n) {
    require_weight(n, "index_convert");
    switch (from) {
    case IndexSet::hooktype: {
        const HookType h = as_hooktype(value, n);
        if (to == IndexSet::hooktype) return h.ks();
        return to == IndexSet::delta ? delta_of(h).ds() : pi_of_hooktype(h).mus();
    }
    case IndexSet::delta: {
        const DifferenceSequence d = as_delta(value, n);
        if (to == IndexSet::delta) return d.ds();
        return to == IndexSet::hooktype ? hooktype_of(d).ks() : pi_of_delta(d).mus();
    }
    case IndexSet::pi: {
        const BoundedPartition b = as_pi(value, n);
        if (to == IndexSet::pi) return b.mus();
        return to == IndexSet::hooktype ? hooktype_of_pi(b).ks() : delta_of_pi(b).ds();
    }
    }
    throw std::invalid_argument("index_convert: unknown index set");
}

DifferenceSequence delta_product(const DifferenceSequence& a, const DifferenceSequence& b) {
    std::vector<long long> ds = a.ds();
    ds.insert(ds.end(), b.ds().begin(), b.ds().end());
    return DifferenceSequence(std::move(ds));
}

HookType hooktype_product(const HookType& a, const HookType& b) {
    if (a.rank() == 0) return b;
    if (b.rank() == 0) return a;
    const long long shift = b.ks()[0] + 1;
    std::vector<long long> ks;
    ks.reserve(a.ks().size() + b.ks().size());
    for (long long k : a.ks()) ks.push_back(k + shift);
    for (long long k : b.ks()) ks.push_back(k);
    return HookType(std::move(ks));
}

BoundedPartition pi_product(const BoundedPartition& a, const BoundedPartition& b) {
    if (a.rank() == 0) return b;
    if (b.rank() == 0) return a;
    const long long shift = b.mus()[0];
    std::vector<long long> mus;
    mus.reserve(a.mus().size() + b.mus().size());
    for (long long mu : a.mus()) mus.push_back(mu + shift);
    for (long long mu : b.mus()) mus.push_back(mu);
    return BoundedPartition(std::move(mus));
}

BigInt class_cardinality(const DifferenceSequence& d) {
    BigInt card = 1;
    for (long long x : d.ds()) card *= x;
    return card;
}

TriangularMatrix3::TriangularMatrix3(std::array<BigInt, 9> entries, TriShape shape)
    : e_(std::move(entries)), shape_(shape) {
    for (int i = 0; i < 3; ++i)
        if (e_[static_cast<std::size_t>(i * 3 + i)] != 1)
            throw std::invalid_argument("matrix must be unit triangular");
    const bool upper = shape_ == TriShape::upper;
    for (int row = 0; row < 3; ++row)
        for (int col = 0; col < 3; ++col) {
            const bool must_be_zero = upper ? row > col : row < col;
            if (must_be_zero && e_[static_cast<std::size_t>(row * 3 + col)] != 0)
                throw std::invalid_argument("matrix entry breaks the triangular shape");
        }
}

TriangularMatrix3 TriangularMatrix3::identity(TriShape shape) {
    return TriangularMatrix3({1, 0, 0, 0, 1, 0, 0, 0, 1}, shape);
}

const BigInt& TriangularMatrix3::at(int row, int col) const {
    if (row < 0 || row > 2 || col < 0 || col > 2)
        throw std::invalid_argument("matrix index out of range");
    return e_[static_cast<std::size_t>(row * 3 + col)];
}

TriangularMatrix3 operator*(const TriangularMatrix3& a, const TriangularMatrix3& b) {
    if (a.shape_ != b.shape_)
        throw std::invalid_argument("cannot multiply matrices of different shapes");
    std::array<BigInt, 9> e;
    for (int row = 0; row < 3; ++row)
        for (int col = 0; col < 3; ++col) {
            BigInt sum = 0;
            for (int k = 0; k < 3; ++k)
                sum += a.at(row, k) * b.at(k, col);
            e[static_cast<std::size_t>(row * 3 + col)] = std::move(sum);
        }
    return TriangularMatrix3(std::move(e), a.shape_);
}

TriangularMatrix3 phi3(const Partition& p) {
    const BigInt outer = p.empty() ? 0 : outer_hook_size(p) + 1;
    return TriangularMatrix3({1, 0, 0,
                              outer, 1, 0,
                              p.weight(), p.durfee(), 1},
                             TriShape::lower);
}

TriangularMatrix3 phi4(const DifferenceSequence& d) {
    BigInt weighted = 0, plain = 0;
    for (long long i = 0; i < d.rank(); ++i) {
        weighted += BigInt(i + 1) * d.ds()[static_cast<std::size_t>(i)];
        plain += d.ds()[static_cast<std::size_t>(i)];
    }
    return TriangularMatrix3({1, d.rank(), weighted,
                              0, 1, plain,
                              0, 0, 1},
                             TriShape::upper);
}

BigInt class_count(long long n) {
    require_weight(n, "class_count");
    // classes of rank r correspond to partitions of n - r^2 into parts <= r
    BigInt total = 0;
    for (long long r = 1; r * r <= n; ++r) {
        const long long m = n - r * r;
        std::vector<BigInt> ways(static_cast<std::size_t>(m) + 1);
        ways[0] = 1;
        for (long long part = 1; part <= std::min(r, m); ++part)
            for (long long v = part; v <= m; ++v)
                ways[static_cast<std::size_t>(v)] += ways[static_cast<std::size_t>(v - part)];
        total += ways[static_cast<std::size_t>(m)];
    }
    return total;
}

std::vector<CongruenceClass> classes_of(long long n) {
    require_weight(n, "classes_of");
    std::vector<CongruenceClass> classes;
    for (long long r = 1; r * r <= n; ++r)
        for (HookType& h : hooktypes(n, r)) {
            DifferenceSequence d = delta_of(h);
            BigInt card = class_cardinality(d);
            BoundedPartition pi = pi_of_hooktype(h);
            classes.push_back({std::move(h), std::move(d), std::move(pi), std::move(card)});
        }
    return classes;
}

} // namespace hookmonoid

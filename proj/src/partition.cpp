#include "hookmonoid/partition.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace hookmonoid {

namespace {

constexpr long long max_materialized_parts = 1 << 22;

void check_weakly_decreasing_positive(const std::vector<long long>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

void check_strictly_decreasing_nonneg(const std::vector<long long>& v, const char* what) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0)
            throw std::invalid_argument(std::string(what) + " entries must be non-negative");
        if (i > 0 && v[i] >= v[i - 1])
            throw std::invalid_argument(std::string(what) + " entries must be strictly decreasing");
    }
}

long long checked_sum(const std::vector<long long>& v) {
    long long total = 0;
    for (long long x : v) {
        if (__builtin_add_overflow(total, x, &total))
            throw std::invalid_argument("weight overflows a 64-bit integer");
    }
    return total;
}

std::vector<long long> parse_tuple(const std::string& text, const char* what) {
    std::vector<long long> values;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        const auto first = token.find_first_not_of(" \t");
        const auto last = token.find_last_not_of(" \t");
        if (first == std::string::npos)
            throw std::invalid_argument(std::string("empty entry in ") + what);
        token = token.substr(first, last - first + 1);
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("malformed ") + what + ": '" + token + "'");
        }
        if (used != token.size())
            throw std::invalid_argument(std::string("malformed ") + what + ": '" + token + "'");
        values.push_back(value);
    }
    return values;
}

} // namespace

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
    check_weakly_decreasing_positive(parts_);
    checked_sum(parts_);
}

Partition Partition::parse(const std::string& text) {
    std::string trimmed = text;
    const auto first = trimmed.find_first_not_of(" \t");
    if (first == std::string::npos) return Partition{};
    const auto last = trimmed.find_last_not_of(" \t");
    trimmed = trimmed.substr(first, last - first + 1);
    if (trimmed.empty() || trimmed == "0") return Partition{};
    return Partition(parse_tuple(trimmed, "partition"));
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    return out.str();
}

long long Partition::weight() const { return checked_sum(parts_); }

long long Partition::durfee() const {
    long long r = 0;
    while (r < static_cast<long long>(parts_.size()) &&
           parts_[static_cast<std::size_t>(r)] >= r + 1)
        ++r;
    return r;
}

FrobeniusSymbol::FrobeniusSymbol(std::vector<long long> arms_in, std::vector<long long> legs_in)
    : arms(std::move(arms_in)), legs(std::move(legs_in)) {
    if (arms.size() != legs.size())
        throw std::invalid_argument("Frobenius symbol needs equally many arms and legs");
    check_strictly_decreasing_nonneg(arms, "arm");
    check_strictly_decreasing_nonneg(legs, "leg");
}

HookType::HookType(std::vector<long long> ks) : ks_(std::move(ks)) {
    for (std::size_t i = 0; i < ks_.size(); ++i) {
        if (ks_[i] < 1)
            throw std::invalid_argument("hook sizes must be positive");
        if (i > 0 && ks_[i - 1] < ks_[i] + 2)
            throw std::invalid_argument("hook sizes must decrease by at least 2");
    }
}

long long HookType::weight() const { return checked_sum(ks_); }

DifferenceSequence::DifferenceSequence(std::vector<long long> ds) : ds_(std::move(ds)) {
    for (long long d : ds_)
        if (d < 1) throw std::invalid_argument("difference entries must be positive");
}

BoundedPartition::BoundedPartition(std::vector<long long> mus) : mus_(std::move(mus)) {
    for (std::size_t i = 0; i < mus_.size(); ++i) {
        if (mus_[i] < 0)
            throw std::invalid_argument("entries must be non-negative");
        if (i > 0 && mus_[i] > mus_[i - 1])
            throw std::invalid_argument("entries must be weakly decreasing");
    }
}

long long BoundedPartition::sum() const { return checked_sum(mus_); }

Partition conjugate(const Partition& p) {
    if (p.empty()) return p;
    const auto& parts = p.parts();
    if (parts[0] > max_materialized_parts)
        throw std::invalid_argument("conjugate would materialize too many parts");
    std::vector<long long> conj(static_cast<std::size_t>(parts[0]));
    // lambda'_i counts the parts of size >= i
    for (long long i = 1; i <= parts[0]; ++i) {
        long long lo = 0, hi = static_cast<long long>(parts.size());
        while (lo < hi) {
            long long mid = (lo + hi) / 2;
            if (parts[static_cast<std::size_t>(mid)] >= i) lo = mid + 1; else hi = mid;
        }
        conj[static_cast<std::size_t>(i - 1)] = lo;
    }
    return Partition(std::move(conj));
}

FrobeniusSymbol to_frobenius(const Partition& p) {
    const long long r = p.durfee();
    const auto& parts = p.parts();
    std::vector<long long> arms(static_cast<std::size_t>(r));
    std::vector<long long> legs(static_cast<std::size_t>(r));
    for (long long i = 0; i < r; ++i)
        arms[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] - (i + 1);
    // legs from column heights, without materializing the conjugate
    for (long long i = 1; i <= r; ++i) {
        long long lo = 0, hi = static_cast<long long>(parts.size());
        while (lo < hi) {
            long long mid = (lo + hi) / 2;
            if (parts[static_cast<std::size_t>(mid)] >= i) lo = mid + 1; else hi = mid;
        }
        legs[static_cast<std::size_t>(i - 1)] = lo - i;
    }
    return FrobeniusSymbol(std::move(arms), std::move(legs));
}

Partition from_frobenius(const FrobeniusSymbol& f) {
    const long long r = f.rank();
    if (r == 0) return Partition{};
    const long long rows = f.legs[0] + 1;
    if (rows > max_materialized_parts)
        throw std::invalid_argument("from_frobenius: partition has too many parts");
    std::vector<long long> parts(static_cast<std::size_t>(rows));
    for (long long i = 0; i < r; ++i)
        parts[static_cast<std::size_t>(i)] = f.arms[static_cast<std::size_t>(i)] + i + 1;
    // below the Durfee square, row i holds one cell for every leg reaching it
    for (long long i = r; i < rows; ++i) {
        long long c = 0;
        while (c < r && f.legs[static_cast<std::size_t>(c)] + c >= i) ++c;
        parts[static_cast<std::size_t>(i)] = c;
    }
    return Partition(std::move(parts));
}

HookType hook_type(const Partition& p) {
    if (p.empty())
        throw std::invalid_argument("the empty partition has no hook type");
    const FrobeniusSymbol f = to_frobenius(p);
    std::vector<long long> ks(static_cast<std::size_t>(f.rank()));
    for (std::size_t i = 0; i < ks.size(); ++i)
        ks[i] = f.arms[i] + f.legs[i] + 1;
    return HookType(std::move(ks));
}

long long outer_hook_size(const Partition& p) {
    if (p.empty())
        throw std::invalid_argument("the empty partition has no hooks");
    return p.parts()[0] + static_cast<long long>(p.parts().size()) - 1;
}

long long inner_hook_size(const Partition& p) {
    const auto ks = hook_type(p).ks();
    return ks.back();
}

DifferenceSequence delta_of(const HookType& h) {
    const auto& ks = h.ks();
    if (ks.empty()) return DifferenceSequence{};
    std::vector<long long> ds(ks.size());
    for (std::size_t i = 0; i + 1 < ks.size(); ++i)
        ds[i] = ks[i] - ks[i + 1] - 1;
    ds.back() = ks.back();
    return DifferenceSequence(std::move(ds));
}

HookType hooktype_of(const DifferenceSequence& d) {
    const auto& ds = d.ds();
    if (ds.empty()) return HookType{};
    const long long r = d.rank();
    std::vector<long long> ks(ds.size());
    long long suffix = 0;
    for (long long i = r - 1; i >= 0; --i) {
        suffix += ds[static_cast<std::size_t>(i)];
        ks[static_cast<std::size_t>(i)] = (r - 1 - i) + suffix;
    }
    return HookType(std::move(ks));
}

BigInt delta_weight(const DifferenceSequence& d) {
    const auto& ds = d.ds();
    const long long r = d.rank();
    BigInt w = BigInt(r) * (r - 1) / 2;
    for (long long i = 0; i < r; ++i)
        w += BigInt(i + 1) * ds[static_cast<std::size_t>(i)];
    return w;
}

std::string render(const Partition& p, RenderOrientation orientation, bool mark_hooks) {
    const auto& parts = p.parts();
    if (!parts.empty() && (parts[0] > 4096 || static_cast<long long>(parts.size()) > 4096))
        throw std::invalid_argument("partition too large to render");
    std::vector<std::string> rows;
    rows.reserve(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        std::string row(static_cast<std::size_t>(parts[i]), '#');
        if (mark_hooks)
            for (std::size_t j = 0; j < row.size(); ++j)
                row[j] = static_cast<char>('1' + std::min(i, j) % 9);
        rows.push_back(std::move(row));
    }
    if (orientation == RenderOrientation::cartesian)
        std::reverse(rows.begin(), rows.end());
    std::string out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out += '\n';
        out += rows[i];
    }
    return out;
}

std::string format_tuple(const std::vector<long long>& values) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << ',';
        out << values[i];
    }
    out << ')';
    return out.str();
}

} // namespace hookmonoid

#include "hookmonoid/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hookmonoid/counting.hpp"
#include "hookmonoid/monoid.hpp"
#include "hookmonoid/numeric.hpp"
#include "hookmonoid/oracle.hpp"
#include "hookmonoid/partition.hpp"
#include "hookmonoid/quotient.hpp"
#include "hookmonoid/series.hpp"

namespace hookmonoid::cli {

namespace {

using nlohmann::json;

std::vector<long long> parse_values(const std::string& text, const char* what) {
    std::vector<long long> out;
    std::string trimmed = text;
    const auto first = trimmed.find_first_not_of(" \t");
    const auto last = trimmed.find_last_not_of(" \t");
    trimmed = first == std::string::npos ? std::string{} : trimmed.substr(first, last - first + 1);
    if (trimmed.empty()) return out;
    std::stringstream stream(trimmed);
    std::string token;
    while (std::getline(stream, token, ',')) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("malformed ") + what + ": '" + token + "'");
        }
        if (used != token.size())
            throw std::invalid_argument(std::string("malformed ") + what + ": '" + token + "'");
        out.push_back(value);
    }
    return out;
}

std::size_t series_truncation() {
    const char* env = std::getenv("HOOKMONOID_SERIES_N");
    if (env == nullptr) return default_series_truncation;
    const std::string text(env);
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(text, &used);
    } catch (const std::exception&) {
        used = std::string::npos;
    }
    if (used != text.size() || value < 1)
        throw std::invalid_argument("HOOKMONOID_SERIES_N must be a positive integer, got '"
                                    + text + "'");
    return static_cast<std::size_t>(value);
}

void emit_count(std::ostream& out, bool as_json, json record, const BigInt& value) {
    if (as_json) {
        record["value"] = value.str();
        out << record.dump(2) << "\n";
    } else {
        out << value.str() << "\n";
    }
}

std::string hook_text(const Hook1& h) {
    const Partition p = h.to_partition();
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) out << ',';
        out << p.parts()[i];
    }
    out << ']';
    return out.str();
}

// Partition in the class of h whose legs are the staircase (r-1,...,1,0).
Partition leg_representative(const HookType& h) {
    const long long r = h.rank();
    std::vector<long long> arms(static_cast<std::size_t>(r));
    std::vector<long long> legs(static_cast<std::size_t>(r));
    for (long long i = 0; i < r; ++i) {
        legs[static_cast<std::size_t>(i)] = r - 1 - i;
        arms[static_cast<std::size_t>(i)] =
            h.ks()[static_cast<std::size_t>(i)] - legs[static_cast<std::size_t>(i)] - 1;
    }
    return from_frobenius(FrobeniusSymbol(std::move(arms), std::move(legs)));
}

// The conjugate choice: arms form the staircase instead.
Partition arm_representative(const HookType& h) {
    const long long r = h.rank();
    std::vector<long long> arms(static_cast<std::size_t>(r));
    std::vector<long long> legs(static_cast<std::size_t>(r));
    for (long long i = 0; i < r; ++i) {
        arms[static_cast<std::size_t>(i)] = r - 1 - i;
        legs[static_cast<std::size_t>(i)] =
            h.ks()[static_cast<std::size_t>(i)] - arms[static_cast<std::size_t>(i)] - 1;
    }
    return from_frobenius(FrobeniusSymbol(std::move(arms), std::move(legs)));
}

std::vector<Partition> partitions_up_to(long long max_weight) {
    std::vector<Partition> out{Partition{}};
    for (long long n = 1; n <= max_weight; ++n)
        for (Partition& p : oracle::enumerate(n)) out.push_back(std::move(p));
    return out;
}

std::vector<HookType> hooktypes_up_to(long long max_weight) {
    std::vector<HookType> out{HookType{}};
    for (long long n = 1; n <= max_weight; ++n)
        for (long long r = 1; r * r <= n; ++r)
            for (HookType& h : hooktypes(n, r)) out.push_back(std::move(h));
    return out;
}

long long outer_plus_one(const Partition& p) {
    return p.empty() ? 0 : outer_hook_size(p) + 1;
}

// ---------------------------------------------------------------------------
// verify: ordered identity checks, each bounded by max_n. A check returns an
// empty string on success and a short description of the first failure.

struct Check {
    std::string name;
    std::function<std::string()> body;
};

std::vector<Check> build_checks(long long max_n, std::size_t truncation) {
    std::vector<Check> checks;
    const long long pair_n = max_n / 2;

    checks.push_back({"pentagonal recurrence matches the enumerator", [max_n]() -> std::string {
        const auto table = oracle::pentagonal_table(max_n);
        for (long long n = 0; n <= max_n; ++n)
            if (oracle::count_all(n) != table[static_cast<std::size_t>(n)])
                return "n = " + std::to_string(n);
        return {};
    }});

    checks.push_back({"p(n) four ways: hook types, h-decomposition, series, oracle",
                      [max_n, truncation]() -> std::string {
        for (long long n = 1; n <= max_n; ++n) {
            const BigInt a = p_n(n);
            const BigInt b = p_n_hdecomp(n);
            const BigInt c = gf_pn_coeff(n, truncation);
            const BigInt d = oracle::count_all(n);
            if (a != b || a != c || a != d)
                return "n = " + std::to_string(n) + ": " + a.str() + ", " + b.str()
                       + ", " + c.str() + ", " + d.str();
        }
        return {};
    }});

    checks.push_back({"p(n,r): hook-type sum, peel recurrence, oracle", [max_n]() -> std::string {
        for (long long n = 1; n <= max_n; ++n) {
            BigInt total = 0;
            for (long long r = 1; r * r <= n; ++r) {
                const BigInt a = p_nr(n, r, PnrMethod::sum);
                const BigInt b = p_nr(n, r, PnrMethod::recurrence);
                const BigInt c = oracle::count_where(n, oracle::DurfeeIs{r});
                if (a != b || a != c)
                    return "n = " + std::to_string(n) + ", r = " + std::to_string(r);
                total += a;
            }
            if (total != p_n(n)) return "sum over r at n = " + std::to_string(n);
        }
        return {};
    }});

    checks.push_back({"closed forms for p(n,2) and p(n,3)", [max_n]() -> std::string {
        for (long long n = 4; n <= max_n; ++n)
            if (p_nr_closed(n, 2) != p_nr(n, 2)) return "r = 2, n = " + std::to_string(n);
        for (long long n = 9; n <= max_n; ++n)
            if (p_nr_closed(n, 3) != p_nr(n, 3)) return "r = 3, n = " + std::to_string(n);
        return {};
    }});

    checks.push_back({"series coefficients in product and derivative form",
                      [max_n, truncation]() -> std::string {
        for (long long n = 1; n <= max_n; ++n)
            for (long long r = 1; r * r <= n; ++r) {
                const BigInt want = p_nr(n, r);
                if (gf_pnr_coeff(n, r, GfForm::product, truncation) != want
                    || gf_pnr_coeff(n, r, GfForm::derivative, truncation) != want)
                    return "n = " + std::to_string(n) + ", r = " + std::to_string(r);
            }
        return {};
    }});

    checks.push_back({"hook-type class sizes match exhaustive counts", [max_n]() -> std::string {
        for (long long n = 1; n <= max_n; ++n) {
            std::map<std::vector<long long>, long long> seen;
            oracle::scan_partitions(n, [&](const oracle::PartitionView& v) {
                ++seen[v.hook_type()];
            });
            long long classes = 0;
            for (long long r = 1; r * r <= n; ++r)
                for (const HookType& h : hooktypes(n, r)) {
                    ++classes;
                    const auto it = seen.find(h.ks());
                    const BigInt counted = it == seen.end() ? 0 : it->second;
                    if (p_hooktype(h) != counted)
                        return "hook type " + format_tuple(h.ks()) + " at n = "
                               + std::to_string(n);
                }
            if (classes != static_cast<long long>(seen.size()))
                return "class census at n = " + std::to_string(n);
        }
        return {};
    }});

    checks.push_back({"unique factorization into hooks round-trips", [max_n]() -> std::string {
        for (long long n = 1; n <= max_n; ++n)
            for (const Partition& p : oracle::enumerate(n)) {
                const std::vector<Hook1> hooks = factor(p);
                if (product_of_hooks(hooks) != p)
                    return "rebuild of " + p.to_string();
                const std::vector<long long> ds = delta_of(hook_type(p)).ds();
                if (hooks.size() != ds.size())
                    return "factor count of " + p.to_string();
                for (std::size_t i = 0; i < hooks.size(); ++i)
                    if (hooks[i].size() != ds[i])
                        return "factor sizes of " + p.to_string();
            }
        return {};
    }});

    checks.push_back({"the product is associative with a two-sided identity",
                      [max_n]() -> std::string {
        const auto triple_pool = partitions_up_to(std::min(max_n, 6ll));
        for (const Partition& a : triple_pool)
            for (const Partition& b : triple_pool)
                for (const Partition& c : triple_pool)
                    if (product(product(a, b), c) != product(a, product(b, c)))
                        return "(" + a.to_string() + ") * (" + b.to_string() + ") * ("
                               + c.to_string() + ")";
        const Partition empty;
        for (const Partition& p : partitions_up_to(max_n))
            if (product(empty, p) != p || product(p, empty) != p)
                return "identity at " + p.to_string();
        return {};
    }});

    checks.push_back({"Durfee, hook-count, weight and conjugation laws",
                      [pair_n]() -> std::string {
        const auto pool = partitions_up_to(pair_n);
        for (const Partition& a : pool)
            for (const Partition& b : pool) {
                const Partition p = product(a, b);
                if (p.durfee() != a.durfee() + b.durfee())
                    return "Durfee law at " + a.to_string() + " * " + b.to_string();
                if (outer_plus_one(p) != outer_plus_one(a) + outer_plus_one(b))
                    return "hook-count law at " + a.to_string() + " * " + b.to_string();
                if (p.weight() != a.weight() + b.weight() + a.durfee() * outer_plus_one(b))
                    return "weight law at " + a.to_string() + " * " + b.to_string();
                if (conjugate(p) != product(conjugate(a), conjugate(b)))
                    return "conjugation at " + a.to_string() + " * " + b.to_string();
            }
        return {};
    }});

    checks.push_back({"the product descends to classes in all three index sets",
                      [pair_n]() -> std::string {
        const auto pool = hooktypes_up_to(pair_n);
        for (const HookType& h1 : pool)
            for (const HookType& h2 : pool) {
                const HookType hp = hooktype_product(h1, h2);
                const Partition a = h1.rank() ? leg_representative(h1) : Partition{};
                const Partition b = h2.rank() ? arm_representative(h2) : Partition{};
                const Partition ab = product(a, b);
                if (hp.rank() == 0) {
                    if (!ab.empty()) return "empty class product";
                } else if (hook_type(ab) != hp) {
                    return "representative product at " + format_tuple(h1.ks()) + " * "
                           + format_tuple(h2.ks());
                }
                if (delta_product(delta_of(h1), delta_of(h2)) != delta_of(hp))
                    return "delta product at " + format_tuple(h1.ks()) + " * "
                           + format_tuple(h2.ks());
                if (class_cardinality(delta_of(hp))
                    != class_cardinality(delta_of(h1)) * class_cardinality(delta_of(h2)))
                    return "cardinality at " + format_tuple(h1.ks()) + " * "
                           + format_tuple(h2.ks());
                if (h1.rank() && h2.rank()) {
                    const BoundedPartition p1(index_convert(h1.ks(), IndexSet::hooktype,
                                                            IndexSet::pi, h1.weight()));
                    const BoundedPartition p2(index_convert(h2.ks(), IndexSet::hooktype,
                                                            IndexSet::pi, h2.weight()));
                    const BoundedPartition pp(index_convert(hp.ks(), IndexSet::hooktype,
                                                            IndexSet::pi, hp.weight()));
                    if (pi_product(p1, p2) != pp)
                        return "pi product at " + format_tuple(h1.ks()) + " * "
                               + format_tuple(h2.ks());
                }
            }
        return {};
    }});

    checks.push_back({"index conversions round-trip across all six directions",
                      [max_n]() -> std::string {
        for (long long n = 1; n <= max_n; ++n)
            for (const CongruenceClass& c : classes_of(n)) {
                using IS = IndexSet;
                const bool ok =
                    index_convert(c.hooktype.ks(), IS::hooktype, IS::delta, n) == c.delta.ds()
                    && index_convert(c.hooktype.ks(), IS::hooktype, IS::pi, n) == c.pi.mus()
                    && index_convert(c.delta.ds(), IS::delta, IS::hooktype, n) == c.hooktype.ks()
                    && index_convert(c.delta.ds(), IS::delta, IS::pi, n) == c.pi.mus()
                    && index_convert(c.pi.mus(), IS::pi, IS::hooktype, n) == c.hooktype.ks()
                    && index_convert(c.pi.mus(), IS::pi, IS::delta, n) == c.delta.ds();
                if (!ok)
                    return "class " + format_tuple(c.hooktype.ks()) + " at n = "
                           + std::to_string(n);
            }
        return {};
    }});

    checks.push_back({"class counts match the parts = +-1 (mod 5) oracle",
                      [max_n]() -> std::string {
        for (long long n = 1; n <= max_n; ++n) {
            const BigInt counted = class_count(n);
            if (counted != BigInt(static_cast<long long>(classes_of(n).size())))
                return "listing size at n = " + std::to_string(n);
            if (counted != oracle::count_where(n, oracle::PartsPm1Mod5{}))
                return "n = " + std::to_string(n);
        }
        return {};
    }});

    checks.push_back({"class cardinalities sum to p(n)", [max_n]() -> std::string {
        for (long long n = 1; n <= max_n; ++n) {
            BigInt total = 0;
            for (const CongruenceClass& c : classes_of(n)) total += c.cardinality;
            if (total != oracle::count_all(n)) return "n = " + std::to_string(n);
        }
        return {};
    }});

    checks.push_back({"both matrix representations are homomorphisms",
                      [pair_n]() -> std::string {
        if (phi3(Partition({1})) * phi3(Partition({1})) != phi3(Partition({2, 2})))
            return "square of the one-box matrix";
        const auto pool = partitions_up_to(pair_n);
        for (const Partition& a : pool)
            for (const Partition& b : pool)
                if (phi3(product(a, b)) != phi3(a) * phi3(b))
                    return "phi3 at " + a.to_string() + " * " + b.to_string();
        const auto classes = hooktypes_up_to(pair_n);
        for (const HookType& h1 : classes)
            for (const HookType& h2 : classes) {
                const DifferenceSequence d1 = delta_of(h1), d2 = delta_of(h2);
                if (phi4(delta_product(d1, d2)) != phi4(d1) * phi4(d2))
                    return "phi4 at " + format_tuple(d1.ds()) + " * " + format_tuple(d2.ds());
            }
        return {};
    }});

    checks.push_back({"the inner-hook weight law", [max_n]() -> std::string {
        for (long long n = 1; n <= max_n; ++n)
            for (long long r = 1; r <= 3; ++r)
                for (long long k = 1; k <= 5; ++k) {
                    const BigInt lifted = pi_count(n + (k + 1) * r + k, r + 1, k);
                    if (lifted != BigInt(k) * p_nr(n, r))
                        return "n = " + std::to_string(n) + ", r = " + std::to_string(r)
                               + ", k = " + std::to_string(k);
                }
        return {};
    }});

    checks.push_back({"inner and outer hook totals match the oracle", [max_n]() -> std::string {
        for (long long n = 1; n <= max_n; ++n) {
            std::map<long long, long long> inner, outer;
            oracle::scan_partitions(n, [&](const oracle::PartitionView& v) {
                const long long r = v.durfee();
                ++inner[v.part(r - 1) + v.conj_part(r) - 2 * r + 1];
                ++outer[v.part(0) + v.count() - 1];
            });
            for (long long k = 1; k <= n; ++k) {
                BigInt pi_total = 0, po_total = 0;
                for (long long r = 1; r * r <= n; ++r) {
                    pi_total += pi_count(n, r, k);
                    po_total += po_count(n, r, k);
                }
                const auto iit = inner.find(k);
                const auto oit = outer.find(k);
                if (pi_total != BigInt(iit == inner.end() ? 0 : iit->second))
                    return "inner at n = " + std::to_string(n) + ", k = " + std::to_string(k);
                if (po_total != BigInt(oit == outer.end() ? 0 : oit->second))
                    return "outer at n = " + std::to_string(n) + ", k = " + std::to_string(k);
            }
        }
        return {};
    }});

    checks.push_back({"multivariate coefficients equal class cardinalities",
                      [max_n]() -> std::string {
        for (long long n = 1; n <= std::min(max_n, 25ll); ++n)
            for (long long r = 1; r <= 3 && r * r <= n; ++r)
                for (const HookType& h : hooktypes(n, r))
                    if (mv_coeff(h, static_cast<std::size_t>(h.weight())) != p_hooktype(h))
                        return "hook type " + format_tuple(h.ks());
        return {};
    }});

    checks.push_back({"square-times-hook counts: divisor sum, oracle, series",
                      [max_n, truncation]() -> std::string {
        for (long long n = 1; n <= max_n; ++n) {
            const BigInt want = dh(n);
            if (want != oracle::count_where(n, oracle::DurfeeTimesHook{}))
                return "oracle at n = " + std::to_string(n);
            if (want != gf_dh_coeff(n, truncation))
                return "series at n = " + std::to_string(n);
        }
        return {};
    }});

    checks.push_back({"Durfee splits peel every trailing unit difference",
                      [max_n]() -> std::string {
        for (long long n = 1; n <= max_n; ++n)
            for (const Partition& p : oracle::enumerate(n)) {
                const auto [rest, side] = durfee_split(p);
                if (product(rest, durfee_square(side)) != p)
                    return "rebuild of " + p.to_string();
                if (!rest.empty()) {
                    const std::vector<long long> ds = delta_of(hook_type(rest)).ds();
                    if (ds.back() == 1)
                        return "split of " + p.to_string() + " is not maximal";
                }
            }
        return {};
    }});

    checks.push_back({"weight extremes match exhaustive rearrangement", []() -> std::string {
        std::vector<long long> values;
        auto descend = [&](auto&& self, long long cap) -> std::string {
            if (!values.empty()) {
                const DifferenceSet set(values);
                const WeightExtremes ex = weight_extremes(set);
                std::vector<long long> arrangement(values.rbegin(), values.rend());
                BigInt lo, hi;
                bool started = false;
                do {
                    const BigInt w = delta_weight(DifferenceSequence(arrangement));
                    if (!started || w < lo) lo = w;
                    if (!started || w > hi) hi = w;
                    started = true;
                } while (std::next_permutation(arrangement.begin(), arrangement.end()));
                if (lo != ex.min_weight || hi != ex.max_weight || ex.spread != hi - lo)
                    return "multiset " + format_tuple(values);
            }
            if (values.size() == 4) return {};
            for (long long v = cap; v >= 1; --v) {
                values.push_back(v);
                std::string fail = self(self, v);
                values.pop_back();
                if (!fail.empty()) return fail;
            }
            return {};
        };
        return descend(descend, 4);
    }});

    checks.push_back({"single-d hook types match the filtered enumeration", []() -> std::string {
        for (long long d = 2; d <= 4; ++d)
            for (long long r = 1; r <= 3; ++r) {
                const auto singles = hooktypes_single_d(d, r);
                if (static_cast<long long>(singles.size()) != r)
                    return "count at d = " + std::to_string(d) + ", r = " + std::to_string(r);
                std::vector<long long> expected(static_cast<std::size_t>(r), 1);
                expected[0] = d;
                std::vector<HookType> filtered;
                for (long long w = r * r; w <= r * r + r * (d - 1); ++w)
                    for (const HookType& h : hooktypes(w, r)) {
                        std::vector<long long> ds = delta_of(h).ds();
                        std::sort(ds.begin(), ds.end(), std::greater<>());
                        if (ds == expected) filtered.push_back(h);
                    }
                std::vector<HookType> got = singles;
                auto by_ks = [](const HookType& x, const HookType& y) { return x.ks() < y.ks(); };
                std::sort(got.begin(), got.end(), by_ks);
                std::sort(filtered.begin(), filtered.end(), by_ks);
                if (got != filtered)
                    return "listing at d = " + std::to_string(d) + ", r = " + std::to_string(r);
                for (const HookType& h : singles)
                    if (oracle::count_where(h.weight(), oracle::DiffSetIs{expected}) != BigInt(d))
                        return "oracle at d = " + std::to_string(d) + ", r = " + std::to_string(r);
            }
        return {};
    }});

    return checks;
}

int run_verify(long long max_n, bool as_json, std::ostream& out) {
    const std::size_t truncation =
        std::max(series_truncation(), static_cast<std::size_t>(max_n));
    json records = json::array();
    bool all_ok = true;
    for (const Check& check : build_checks(max_n, truncation)) {
        std::string detail;
        try {
            detail = check.body();
        } catch (const std::exception& e) {
            detail = e.what();
        }
        const bool ok = detail.empty();
        json record{{"name", check.name}, {"ok", ok}};
        if (!ok) record["detail"] = detail;
        records.push_back(std::move(record));
        if (!as_json) {
            if (ok) out << "ok " << check.name << "\n";
            else out << "FAIL " << check.name << ": " << detail << "\n";
        }
        if (!ok) {
            all_ok = false;
            break;
        }
    }
    if (as_json) {
        out << json{{"max_n", max_n}, {"ok", all_ok}, {"checks", records}}.dump(2) << "\n";
    } else if (all_ok) {
        out << "all identities hold up to n = " << max_n << "\n";
    }
    return all_ok ? 0 : 2;
}

IndexSet index_set_of(const std::string& name) {
    if (name == "hooktype") return IndexSet::hooktype;
    if (name == "delta") return IndexSet::delta;
    if (name == "pi") return IndexSet::pi;
    throw std::invalid_argument("unknown index set '" + name + "'");
}

void print_matrix(std::ostream& out, bool as_json, const TriangularMatrix3& m) {
    if (as_json) {
        json rows = json::array();
        for (int i = 0; i < 3; ++i) {
            json row = json::array();
            for (int j = 0; j < 3; ++j) row.push_back(m.at(i, j).str());
            rows.push_back(std::move(row));
        }
        out << json{{"shape", m.shape() == TriShape::lower ? "lower" : "upper"},
                    {"rows", rows}}.dump(2)
            << "\n";
        return;
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (j) out << ' ';
            out << m.at(i, j);
        }
        out << "\n";
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact hook calculus on integer partitions"};
    app.name("hookmonoid");
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable JSON");

    std::string method_n = "hooktypes";
    std::string method_nr = "hooktypes";
    long long count_weight = 0, count_rank = 0, nr_weight = 0;
    std::string hooktype_text, factor_text, product_a, product_b;
    std::string convert_value, convert_from, convert_to;
    long long convert_n = 0, dh_weight = 0, classes_weight = 0, verify_max_n = 12;
    std::string matrix_text, matrix_delta, extremes_text, render_text;
    bool render_cartesian = false, render_hooks = false;

    auto* count_cmd = app.add_subcommand("count", "count partitions by hook structure");
    count_cmd->require_subcommand(1);
    count_cmd->fallthrough();

    auto* count_n_cmd = count_cmd->add_subcommand("n", "p(n), all partitions of n");
    count_n_cmd->fallthrough();
    count_n_cmd->add_option("n", count_weight, "weight")->required();
    count_n_cmd->add_option("--method", method_n, "hooktypes, series, hdecomp or oracle")
        ->check(CLI::IsMember({"hooktypes", "series", "hdecomp", "oracle"}));

    auto* count_nr_cmd = count_cmd->add_subcommand("nr", "partitions of n with Durfee size r");
    count_nr_cmd->fallthrough();
    count_nr_cmd->add_option("n", nr_weight, "weight")->required();
    count_nr_cmd->add_option("r", count_rank, "Durfee size")->required();
    count_nr_cmd->add_option("--method", method_nr,
                             "hooktypes, recurrence, closed, series or oracle")
        ->check(CLI::IsMember({"hooktypes", "recurrence", "closed", "series", "oracle"}));

    auto* count_ht_cmd = count_cmd->add_subcommand("hooktype",
                                                   "partitions with the given hook type");
    count_ht_cmd->fallthrough();
    count_ht_cmd->add_option("hooktype", hooktype_text, "hook sizes, e.g. 7,4")->required();

    auto* factor_cmd = app.add_subcommand("factor", "factor a partition into hooks");
    factor_cmd->fallthrough();
    factor_cmd->add_option("partition", factor_text, "comma-separated parts")->required();

    auto* product_cmd = app.add_subcommand("product", "multiply two partitions");
    product_cmd->fallthrough();
    product_cmd->add_option("a", product_a, "left factor")->required();
    product_cmd->add_option("b", product_b, "right factor")->required();

    auto* convert_cmd = app.add_subcommand("convert", "convert a class label between index sets");
    convert_cmd->fallthrough();
    convert_cmd->add_option("value", convert_value, "comma-separated label")->required();
    convert_cmd->add_option("--from", convert_from, "hooktype, delta or pi")->required();
    convert_cmd->add_option("--to", convert_to, "hooktype, delta or pi")->required();
    convert_cmd->add_option("--n", convert_n, "weight of the class")->required();

    auto* matrix_cmd = app.add_subcommand("matrix", "triangular matrix representation");
    matrix_cmd->fallthrough();
    auto* matrix_pos = matrix_cmd->add_option("partition", matrix_text,
                                              "partition for the lower representation");
    auto* matrix_delta_opt = matrix_cmd->add_option("--delta", matrix_delta,
                                                    "difference sequence for the upper one");
    matrix_pos->excludes(matrix_delta_opt);

    auto* dh_cmd = app.add_subcommand("dh", "partitions that are a Durfee square times a hook");
    dh_cmd->fallthrough();
    dh_cmd->add_option("n", dh_weight, "weight")->required();

    auto* classes_cmd = app.add_subcommand("classes", "all hook-type classes of weight n");
    classes_cmd->fallthrough();
    classes_cmd->add_option("n", classes_weight, "weight")->required();

    auto* extremes_cmd = app.add_subcommand("extremes",
                                            "extreme class weights over rearrangements");
    extremes_cmd->fallthrough();
    extremes_cmd->add_option("values", extremes_text, "difference entries, e.g. 4,2,1,1")
        ->required();

    auto* render_cmd = app.add_subcommand("render", "ASCII Ferrers diagram");
    render_cmd->fallthrough();
    render_cmd->add_option("partition", render_text, "comma-separated parts")->required();
    render_cmd->add_flag("--cartesian", render_cartesian, "rows bottom-to-top");
    render_cmd->add_flag("--hooks", render_hooks, "mark the central hooks");

    auto* verify_cmd = app.add_subcommand("verify", "run the oracle cross-check suite");
    verify_cmd->fallthrough();
    verify_cmd->add_option("--max-n", verify_max_n, "verify identities up to this weight")
        ->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    }

    try {
        if (count_n_cmd->parsed()) {
            BigInt value;
            if (method_n == "hooktypes") value = p_n(count_weight);
            else if (method_n == "series") value = gf_pn_coeff(count_weight, series_truncation());
            else if (method_n == "hdecomp") value = p_n_hdecomp(count_weight);
            else if (count_weight >= 1) value = oracle::count_all(count_weight);
            else throw std::invalid_argument("count n: weight must be >= 1");
            emit_count(out, as_json, {{"n", count_weight}, {"method", method_n}}, value);
            return 0;
        }
        if (count_nr_cmd->parsed()) {
            BigInt value;
            if (method_nr == "hooktypes") value = p_nr(nr_weight, count_rank);
            else if (method_nr == "recurrence")
                value = p_nr(nr_weight, count_rank, PnrMethod::recurrence);
            else if (method_nr == "closed") value = p_nr_closed(nr_weight, count_rank);
            else if (method_nr == "series")
                value = gf_pnr_coeff(nr_weight, count_rank, GfForm::product, series_truncation());
            else if (nr_weight >= 1 && count_rank >= 1)
                value = oracle::count_where(nr_weight, oracle::DurfeeIs{count_rank});
            else
                throw std::invalid_argument("count nr: weight and rank must be >= 1");
            emit_count(out, as_json,
                       {{"n", nr_weight}, {"r", count_rank}, {"method", method_nr}}, value);
            return 0;
        }
        if (count_ht_cmd->parsed()) {
            const HookType h(parse_values(hooktype_text, "hook type"));
            emit_count(out, as_json, {{"hooktype", h.ks()}}, p_hooktype(h));
            return 0;
        }
        if (factor_cmd->parsed()) {
            const Partition p = Partition::parse(factor_text);
            const std::vector<Hook1> hooks = factor(p);
            const HookType h = p.empty() ? HookType{} : hook_type(p);
            const DifferenceSequence d = delta_of(h);
            if (as_json) {
                json hook_list = json::array();
                for (const Hook1& hook : hooks) hook_list.push_back(hook.to_partition().parts());
                out << json{{"partition", p.parts()},
                            {"hooks", hook_list},
                            {"hooktype", h.ks()},
                            {"delta", d.ds()}}.dump(2)
                    << "\n";
            } else {
                out << "hooks";
                for (std::size_t i = 0; i < hooks.size(); ++i)
                    out << (i ? "," : " ") << hook_text(hooks[i]);
                out << "\n";
                out << "hooktype " << format_tuple(h.ks()) << "\n";
                out << "delta " << format_tuple(d.ds()) << "\n";
            }
            return 0;
        }
        if (product_cmd->parsed()) {
            const Partition a = Partition::parse(product_a);
            const Partition b = Partition::parse(product_b);
            const Partition p = product(a, b);
            if (as_json)
                out << json{{"a", a.parts()}, {"b", b.parts()}, {"product", p.parts()}}.dump(2)
                    << "\n";
            else
                out << p.to_string() << "\n";
            return 0;
        }
        if (convert_cmd->parsed()) {
            const std::vector<long long> result =
                index_convert(parse_values(convert_value, "class label"),
                              index_set_of(convert_from), index_set_of(convert_to), convert_n);
            if (as_json)
                out << json{{"value", parse_values(convert_value, "class label")},
                            {"from", convert_from},
                            {"to", convert_to},
                            {"n", convert_n},
                            {"result", result}}.dump(2)
                    << "\n";
            else
                out << format_tuple(result) << "\n";
            return 0;
        }
        if (matrix_cmd->parsed()) {
            const bool has_partition = matrix_pos->count() > 0;
            const bool has_delta = matrix_delta_opt->count() > 0;
            if (has_partition == has_delta)
                throw std::invalid_argument("matrix: give a partition or --delta");
            const TriangularMatrix3 m =
                has_partition
                    ? phi3(Partition::parse(matrix_text))
                    : phi4(DifferenceSequence(parse_values(matrix_delta, "difference sequence")));
            print_matrix(out, as_json, m);
            return 0;
        }
        if (dh_cmd->parsed()) {
            emit_count(out, as_json, {{"n", dh_weight}}, dh(dh_weight));
            return 0;
        }
        if (classes_cmd->parsed()) {
            const std::vector<CongruenceClass> classes = classes_of(classes_weight);
            BigInt total = 0;
            for (const CongruenceClass& c : classes) total += c.cardinality;
            if (as_json) {
                json records = json::array();
                for (const CongruenceClass& c : classes)
                    records.push_back(json{{"hooktype", c.hooktype.ks()},
                                           {"delta", c.delta.ds()},
                                           {"pi", c.pi.mus()},
                                           {"card", c.cardinality.str()}});
                out << records.dump(2) << "\n";
            } else {
                std::vector<std::array<std::string, 4>> rows;
                rows.push_back({"hooktype", "delta", "pi", "card"});
                for (const CongruenceClass& c : classes)
                    rows.push_back({format_tuple(c.hooktype.ks()), format_tuple(c.delta.ds()),
                                    format_tuple(c.pi.mus()), c.cardinality.str()});
                std::array<std::size_t, 4> width{};
                for (const auto& row : rows)
                    for (int j = 0; j < 4; ++j)
                        width[static_cast<std::size_t>(j)] =
                            std::max(width[static_cast<std::size_t>(j)],
                                     row[static_cast<std::size_t>(j)].size());
                for (const auto& row : rows) {
                    for (int j = 0; j < 4; ++j) {
                        const auto& cell = row[static_cast<std::size_t>(j)];
                        out << cell;
                        if (j < 3)
                            out << std::string(width[static_cast<std::size_t>(j)] - cell.size() + 2,
                                               ' ');
                    }
                    out << "\n";
                }
                out << "total " << total << "\n";
            }
            return 0;
        }
        if (extremes_cmd->parsed()) {
            const DifferenceSet set(parse_values(extremes_text, "difference entries"));
            const WeightExtremes ex = weight_extremes(set);
            if (as_json)
                out << json{{"values", set.values()},
                            {"min_sequence", ex.min_sequence.ds()},
                            {"max_sequence", ex.max_sequence.ds()},
                            {"min_weight", ex.min_weight.str()},
                            {"max_weight", ex.max_weight.str()},
                            {"spread", ex.spread.str()}}.dump(2)
                    << "\n";
            else
                out << "min " << format_tuple(ex.min_sequence.ds()) << " weight "
                    << ex.min_weight << "\n"
                    << "max " << format_tuple(ex.max_sequence.ds()) << " weight "
                    << ex.max_weight << "\n"
                    << "spread " << ex.spread << "\n";
            return 0;
        }
        if (render_cmd->parsed()) {
            const Partition p = Partition::parse(render_text);
            const std::string diagram =
                render(p,
                       render_cartesian ? RenderOrientation::cartesian
                                        : RenderOrientation::english,
                       render_hooks);
            if (as_json) {
                json rows = json::array();
                std::stringstream stream(diagram);
                std::string line;
                while (std::getline(stream, line)) rows.push_back(line);
                out << json{{"partition", p.parts()}, {"rows", rows}}.dump(2) << "\n";
            } else if (!diagram.empty()) {
                out << diagram << "\n";
            }
            return 0;
        }
        if (verify_cmd->parsed()) return run_verify(verify_max_n, as_json, out);
    } catch (const ConsistencyError& e) {
        err << "consistency failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand selected\n";
    return 1;
}

} // namespace hookmonoid::cli

#include "hookmonoid/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hookmonoid {

namespace {

void require_window(long long n, std::size_t truncation, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string(what) + ": weight must be >= 1");
    if (static_cast<std::size_t>(n) > truncation)
        throw std::invalid_argument(std::string(what) + ": truncation " + std::to_string(truncation)
                                    + " is too small for n = " + std::to_string(n));
}

} // namespace

Series::Series(std::size_t truncation) : c_(truncation + 1) {}

Series Series::one(std::size_t truncation) {
    Series s(truncation);
    s.c_[0] = 1;
    return s;
}

Series Series::monomial(std::size_t degree, std::size_t truncation) {
    Series s(truncation);
    if (degree <= truncation) s.c_[degree] = 1;
    return s;
}

Series Series::geometric_inverse(long long i, std::size_t truncation) {
    if (i < 1) throw std::invalid_argument("geometric_inverse: period must be >= 1");
    Series s(truncation);
    for (std::size_t d = 0; d <= truncation; d += static_cast<std::size_t>(i))
        s.c_[d] = 1;
    return s;
}

Series Series::derivative() const {
    if (truncation() == 0)
        throw std::invalid_argument("derivative: nothing is known beyond degree 0");
    Series out(truncation() - 1);
    for (std::size_t j = 0; j < c_.size() - 1; ++j)
        out.c_[j] = BigInt(j + 1) * c_[j + 1];
    return out;
}

Series Series::shifted(std::size_t k) const {
    Series out(truncation());
    for (std::size_t j = 0; j + k < c_.size(); ++j)
        out.c_[j + k] = c_[j];
    return out;
}

Series operator*(const Series& a, const Series& b) {
    Series out(std::min(a.truncation(), b.truncation()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; i + j < out.c_.size() && j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            out.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return out;
}

Series operator+(const Series& a, const Series& b) {
    Series out(std::min(a.truncation(), b.truncation()));
    for (std::size_t j = 0; j < out.c_.size(); ++j) out.c_[j] = a.c_[j] + b.c_[j];
    return out;
}

Series operator-(const Series& a, const Series& b) {
    Series out(std::min(a.truncation(), b.truncation()));
    for (std::size_t j = 0; j < out.c_.size(); ++j) out.c_[j] = a.c_[j] - b.c_[j];
    return out;
}

BigInt gf_pnr_coeff(long long n, long long r, GfForm form, std::size_t truncation) {
    require_window(n, truncation, "gf_pnr_coeff");
    if (r < 1) throw std::invalid_argument("gf_pnr_coeff: rank must be >= 1");
    if (r * r > n) return 0;
    if (form == GfForm::product) {
        Series acc = Series::one(truncation);
        for (long long i = 1; i <= r; ++i) {
            const Series g = Series::geometric_inverse(i, truncation);
            acc = acc * g * g;
        }
        return acc.shifted(static_cast<std::size_t>(r * r)).coeff(static_cast<std::size_t>(n));
    }
    // Differentiating each geometric factor once costs one degree of window,
    // so build the factors one degree higher.
    Series acc = Series::one(truncation);
    for (long long i = 1; i <= r; ++i)
        acc = acc * Series::geometric_inverse(i, truncation + 1).derivative();
    acc = acc.shifted(static_cast<std::size_t>(r * (r + 1) / 2));
    BigInt factorial = 1;
    for (long long i = 2; i <= r; ++i) factorial *= i;
    return require_integral(BigRat(acc.coeff(static_cast<std::size_t>(n)), factorial),
                            "gf_pnr_coeff, derivative form");
}

BigInt gf_pn_coeff(long long n, std::size_t truncation) {
    require_window(n, truncation, "gf_pn_coeff");
    BigInt total = 0;
    for (long long r = 1; r * r <= n; ++r)
        total += gf_pnr_coeff(n, r, GfForm::product, truncation);
    return total;
}

BigInt gf_dh_coeff(long long n, std::size_t truncation) {
    require_window(n, truncation, "gf_dh_coeff");
    BigInt total = 0;
    for (long long r = 1; r * r <= n; ++r) {
        const Series g = Series::geometric_inverse(r, truncation);
        total += (g * g).coeff(static_cast<std::size_t>(n - r * r));
    }
    return total;
}

MultiPoly::MultiPoly(int vars, long long max_total_degree)
    : vars_(vars), max_deg_(max_total_degree) {
    if (vars < 1 || vars > 3)
        throw std::invalid_argument("MultiPoly: between 1 and 3 variables");
    if (max_total_degree < 0)
        throw std::invalid_argument("MultiPoly: negative degree bound");
}

MultiPoly MultiPoly::one(int vars, long long max_total_degree) {
    MultiPoly p(vars, max_total_degree);
    p.terms_[{0, 0, 0}] = 1;
    return p;
}

MultiPoly MultiPoly::diagonal_inverse_squared(int vars, int i, long long max_total_degree) {
    MultiPoly p(vars, max_total_degree);
    if (i < 1 || i > vars)
        throw std::invalid_argument("diagonal_inverse_squared: variable index out of range");
    for (long long m = 0; m * i <= max_total_degree; ++m) {
        Exponents e{0, 0, 0};
        for (int v = 0; v < i; ++v) e[static_cast<std::size_t>(v)] = m;
        p.terms_[e] = m + 1;
    }
    return p;
}

void MultiPoly::add_term(const Exponents& e, const BigInt& coeff) {
    long long total = 0;
    for (int v = 0; v < 3; ++v) {
        if (e[static_cast<std::size_t>(v)] < 0)
            throw std::invalid_argument("add_term: negative exponent");
        if (v >= vars_ && e[static_cast<std::size_t>(v)] != 0)
            throw std::invalid_argument("add_term: exponent on an unused variable");
        total += e[static_cast<std::size_t>(v)];
    }
    if (total > max_deg_ || coeff == 0) return;
    BigInt& slot = terms_[e];
    slot += coeff;
    if (slot == 0) terms_.erase(e);
}

BigInt MultiPoly::coeff(const Exponents& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ != b.vars_)
        throw std::invalid_argument("MultiPoly product: mismatched variable counts");
    MultiPoly out(a.vars_, std::min(a.max_deg_, b.max_deg_));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            MultiPoly::Exponents e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            if (e[0] + e[1] + e[2] > out.max_deg_) continue;
            BigInt& slot = out.terms_[e];
            slot += ca * cb;
            if (slot == 0) out.terms_.erase(e);
        }
    return out;
}

BigInt mv_coeff(const HookType& h, std::size_t truncation) {
    const long long r = h.rank();
    if (r == 0) return 1;
    if (r > 3)
        throw std::invalid_argument("mv_coeff: at most 3 hooks");
    const long long weight = h.weight();
    if (static_cast<std::size_t>(weight) > truncation)
        throw std::invalid_argument("mv_coeff: truncation " + std::to_string(truncation)
                                    + " is too small for weight " + std::to_string(weight));
    const int vars = static_cast<int>(r);
    MultiPoly acc(vars, weight);
    MultiPoly::Exponents prefactor{0, 0, 0};
    for (long long j = 1; j <= r; ++j)
        prefactor[static_cast<std::size_t>(j - 1)] = 2 * (r - j) + 1;
    acc.add_term(prefactor, 1);
    for (int i = 1; i <= vars; ++i)
        acc = acc * MultiPoly::diagonal_inverse_squared(vars, i, weight);
    MultiPoly::Exponents target{0, 0, 0};
    for (long long j = 0; j < r; ++j)
        target[static_cast<std::size_t>(j)] = h.ks()[static_cast<std::size_t>(j)];
    return acc.coeff(target);
}

} // namespace hookmonoid

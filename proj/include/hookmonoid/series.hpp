#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <vector>

#include "hookmonoid/partition.hpp"

namespace hookmonoid {

// Truncated formal power series over exact integers, plus the small
// multivariate engine needed for the hook-type generating function.

class Series {
public:
    // Zero series keeping degrees 0..truncation.
    explicit Series(std::size_t truncation);

    static Series one(std::size_t truncation);
    static Series monomial(std::size_t degree, std::size_t truncation);
    // 1 / (1 - x^i) as a geometric expansion.
    static Series geometric_inverse(long long i, std::size_t truncation);

    std::size_t truncation() const { return c_.size() - 1; }
    const BigInt& coeff(std::size_t degree) const { return c_.at(degree); }
    void set_coeff(std::size_t degree, BigInt v) { c_.at(degree) = std::move(v); }

    // Formal d/dx; the result keeps degrees 0..truncation-1, all exact.
    Series derivative() const;
    // Multiplication by x^k (top coefficients fall off the truncation).
    Series shifted(std::size_t k) const;

    friend Series operator*(const Series& a, const Series& b); // truncates to min
    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<BigInt> c_;
};

enum class GfForm { product, derivative };

// Coefficient of x^n in the rank-r generating function, truncation >= n.
// product:    x^(r^2) * prod_{i=1..r} (1 - x^i)^-2
// derivative: x^C(r+1,2) / r! * prod_{i=1..r} d/dx (1 - x^i)^-1,
//             divided exactly with an integrality assertion.
BigInt gf_pnr_coeff(long long n, long long r, GfForm form, std::size_t truncation);

// Coefficient of x^n in the sum over r of the product form; equals p(n).
BigInt gf_pn_coeff(long long n, std::size_t truncation);

// Coefficient of x^n in sum_{r>=1} x^(r^2) / (1 - x^r)^2. The index r runs
// over the divisors of n (square side + 1, the degenerate square included at
// r = 1), so the coefficient equals dh(n) exactly; that identity is pinned in
// the test suite against the brute-force oracle for n <= 100.
BigInt gf_dh_coeff(long long n, std::size_t truncation);

// Sparse multivariate polynomial in up to 3 variables, truncated by total
// degree. Just enough for the multivariate hook-type generating function.
class MultiPoly {
public:
    using Exponents = std::array<long long, 3>;

    MultiPoly(int vars, long long max_total_degree);

    static MultiPoly one(int vars, long long max_total_degree);
    // (1 - x_1 x_2 ... x_i)^-2 expanded to the degree bound.
    static MultiPoly diagonal_inverse_squared(int vars, int i, long long max_total_degree);

    int vars() const { return vars_; }
    long long max_total_degree() const { return max_deg_; }
    void add_term(const Exponents& e, const BigInt& coeff);
    BigInt coeff(const Exponents& e) const;

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

private:
    int vars_;
    long long max_deg_;
    std::map<Exponents, BigInt> terms_;
};

// Coefficient of x_1^{k_1} ... x_r^{k_r} in the rank-r summand
//   x_1^{2r-1} x_2^{2r-3} ... x_r * prod_{i=1..r} (1 - x_1...x_i)^-2
// for hook types with r <= 3; equals p_hooktype(h). Requires weight <= truncation.
BigInt mv_coeff(const HookType& h, std::size_t truncation);

inline constexpr std::size_t default_series_truncation = 128;

} // namespace hookmonoid

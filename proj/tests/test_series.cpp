#include <doctest.h>

#include "hookmonoid/counting.hpp"
#include "hookmonoid/series.hpp"

#include <stdexcept>

using namespace hookmonoid;

TEST_CASE("series primitives") {
    const auto g2 = Series::geometric_inverse(2, 7);
    for (std::size_t m = 0; m <= 7; ++m) CHECK(g2.coeff(m) == (m % 2 == 0 ? 1 : 0));

    // d/dx 1/(1-x) = 1/(1-x)^2, whose coefficients are m + 1
    const auto d = Series::geometric_inverse(1, 7).derivative();
    for (std::size_t m = 0; m <= 6; ++m) CHECK(d.coeff(m) == m + 1);

    const auto shifted = Series::one(5).shifted(2);
    CHECK(shifted.coeff(0) == 0);
    CHECK(shifted.coeff(2) == 1);
    CHECK(shifted.coeff(5) == 0);

    // (1 - x) * 1/(1-x) = 1
    const auto one_minus_x = Series::one(6) - Series::monomial(1, 6);
    CHECK(one_minus_x * Series::geometric_inverse(1, 6) == Series::one(6));

    CHECK_THROWS_AS(Series::geometric_inverse(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(Series(0).derivative(), std::invalid_argument);
    CHECK(Series::monomial(7, 5) == Series(5));   // falls off the truncation
}

TEST_CASE("fixed-durfee coefficients") {
    CHECK(gf_pnr_coeff(13, 2, GfForm::product, 16) == 70);
    CHECK(gf_pnr_coeff(13, 2, GfForm::derivative, 16) == 70);
    CHECK(gf_pnr_coeff(3, 2, GfForm::product, 16) == 0);

    for (long long n = 1; n <= 24; ++n)
        for (long long r = 1; r <= 4; ++r) {
            const BigInt want = p_nr(n, r);
            CHECK(gf_pnr_coeff(n, r, GfForm::product, 24) == want);
            CHECK(gf_pnr_coeff(n, r, GfForm::derivative, 24) == want);
        }

    CHECK_THROWS_AS(gf_pnr_coeff(20, 2, GfForm::product, 16), std::invalid_argument);
}

TEST_CASE("total-count coefficients") {
    CHECK(gf_pn_coeff(10, 16) == 42);
    for (long long n = 1; n <= 30; ++n) CHECK(gf_pn_coeff(n, 30) == p_n(n));
    CHECK_THROWS_AS(gf_pn_coeff(10, 5), std::invalid_argument);
}

TEST_CASE("square-times-hook coefficients") {
    CHECK(gf_dh_coeff(4, 8) == 5);
    for (long long n = 1; n <= 30; ++n) CHECK(gf_dh_coeff(n, 30) == dh(n));
}

TEST_CASE("multivariate engine") {
    const auto one = MultiPoly::one(2, 5);
    CHECK(one.coeff({0, 0, 0}) == 1);
    CHECK(one.coeff({1, 0, 0}) == 0);

    // 1/(1-x1)^2 has coefficient m + 1 at x1^m
    const auto d1 = MultiPoly::diagonal_inverse_squared(2, 1, 5);
    CHECK(d1.coeff({3, 0, 0}) == 4);
    // 1/(1-x1*x2)^2 has coefficient m + 1 on the diagonal
    const auto d2 = MultiPoly::diagonal_inverse_squared(2, 2, 5);
    CHECK(d2.coeff({2, 2, 0}) == 3);
    CHECK(d2.coeff({2, 1, 0}) == 0);

    CHECK_THROWS_AS(MultiPoly::one(4, 5), std::invalid_argument);
    CHECK_THROWS_AS(MultiPoly::one(2, -1), std::invalid_argument);
    CHECK_THROWS_AS(one * MultiPoly::one(3, 5), std::invalid_argument);

    MultiPoly p = MultiPoly::one(2, 5);
    CHECK_THROWS_AS(p.add_term({0, 0, 1}, BigInt(1)), std::invalid_argument);
}

TEST_CASE("multivariate coefficients count partitions by hook type") {
    CHECK(mv_coeff(HookType({7, 4}), 11) == 8);
    CHECK(mv_coeff(HookType({13}), 13) == 13);
    CHECK(mv_coeff(HookType({5, 3, 1}), 9) == 1);

    for (long long n = 1; n <= 16; ++n)
        for (long long r = 1; r <= 3 && r * r <= n; ++r)
            for (const auto& h : hooktypes(n, r))
                CHECK(mv_coeff(h, static_cast<std::size_t>(n)) == p_hooktype(h));

    CHECK_THROWS_AS(mv_coeff(HookType({9, 7, 5, 3}), 24), std::invalid_argument);
    CHECK_THROWS_AS(mv_coeff(HookType({7, 4}), 10), std::invalid_argument);
}

TEST_CASE("exponent patterns that are not hook types have coefficient zero") {
    // assemble the rank-two generating polynomial directly: the prefactor
    // x1^3 x2 times both diagonal factors
    const long long bound = 12;
    MultiPoly acc = MultiPoly::one(2, bound);
    MultiPoly pre(2, bound);
    pre.add_term({3, 1, 0}, BigInt(1));
    acc = acc * pre;
    acc = acc * MultiPoly::diagonal_inverse_squared(2, 1, bound);
    acc = acc * MultiPoly::diagonal_inverse_squared(2, 2, bound);

    CHECK(acc.coeff({6, 4, 0}) == 4);   // (6,4) is a hook type: count 1*4
    CHECK(acc.coeff({5, 4, 0}) == 0);   // gap below two
    CHECK(acc.coeff({4, 4, 0}) == 0);   // equal entries
    CHECK(acc.coeff({3, 3, 0}) == 0);
    CHECK(acc.coeff({4, 5, 0}) == 0);   // increasing
}

TEST_CASE("default truncation") {
    CHECK(default_series_truncation == 128);
}

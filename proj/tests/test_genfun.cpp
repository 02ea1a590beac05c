#include "doctest.h"
#include "pptower/genfun.hpp"
#include "pptower/plane_partition.hpp"

using namespace pptower;

namespace {

IntPolynomial pow(const IntPolynomial& p, unsigned e) {
    IntPolynomial acc{1};
    for (unsigned i = 0; i < e; ++i) acc = acc * p;
    return acc;
}

}  // namespace

TEST_CASE("syt_enumerate counts and validity") {
    CHECK(syt_enumerate(1, 4).size() == 1);
    CHECK(syt_enumerate(2, 2).size() == 2);
    CHECK(syt_enumerate(2, 3).size() == 5);
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned r = 1; r <= 3; ++r) CHECK(syt_enumerate(k, r).size() == hook_count(k, r));
}

TEST_CASE("hook_count") {
    CHECK(hook_count(2, 3) == 5);
    CHECK(hook_count(1, 5) == 1);
    CHECK(hook_count(3, 3) == 42);
    CHECK(hook_count(4, 4) == 24024);
}

TEST_CASE("syt_term worked examples") {
    // rows [1,2,4 | 3,5,6] -> x^2 / ((1-x)(1-x^2)^2(1-x^3)^3)
    StandardYoungTableau t(2, 3, {1, 2, 4, 3, 5, 6});
    auto den = one_minus_xc(1) * pow(one_minus_xc(2), 2) * pow(one_minus_xc(3), 3);
    CHECK(syt_term(t) == RationalFunction(IntPolynomial::monomial(2), den));

    // rows [1,2,3 | 4,5,6] -> 1 / ((1-x)(1-x^2)(1-x^3)^4)
    StandardYoungTableau row_first(2, 3, {1, 2, 3, 4, 5, 6});
    auto den2 = one_minus_xc(1) * one_minus_xc(2) * pow(one_minus_xc(3), 4);
    CHECK(syt_term(row_first) == RationalFunction({1}, den2));

    StandardYoungTableau single(1, 1, {1});
    CHECK(syt_term(single) == RationalFunction({1}, {1, -1}));
}

TEST_CASE("genfun closed forms at r = 1 and k = 1") {
    for (unsigned k = 1; k <= 4; ++k)
        CHECK(genfun(k, 1) == RationalFunction({1}, pow(one_minus_xc(1), k)));
    for (unsigned r = 1; r <= 4; ++r) {
        IntPolynomial den{1};
        for (unsigned c = 1; c <= r; ++c) den = den * one_minus_xc(c);
        CHECK(genfun(1, r) == RationalFunction({1}, den));
    }
}

TEST_CASE("genfun reproduces the displayed rational functions") {
    // F_{2,3}
    IntPolynomial n23 = IntPolynomial{1, 2, 2, 1, 1} * IntPolynomial{1, 1, 2, 2, 1};
    IntPolynomial d23 =
        pow(IntPolynomial{-1, 1}, 6) * pow(IntPolynomial{1, 1}, 3) * pow(IntPolynomial{1, 1, 1}, 4);
    CHECK(genfun(2, 3) == RationalFunction(n23, d23));

    // F_{3,2}
    CHECK(genfun(3, 2) == RationalFunction({1, 2, 4, 2, 1},
                                           pow(IntPolynomial{-1, 1}, 6) * pow(IntPolynomial{1, 1}, 5)));

    // F_{4,2}
    CHECK(genfun(4, 2) == RationalFunction({1, 3, 9, 9, 9, 3, 1},
                                           pow(IntPolynomial{-1, 1}, 8) * pow(IntPolynomial{1, 1}, 7)));
}

TEST_CASE("genfun equals the sum of its tableau terms") {
    for (auto [k, r] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}}) {
        RationalFunction sum;
        for (const auto& t : syt_enumerate(k, r)) sum = sum + syt_term(t);
        CHECK(sum == genfun(k, r));
    }
}

TEST_CASE("series basics") {
    CHECK(series(RationalFunction({1}, {1, -1}), 4) == std::vector<mpz_class>{1, 1, 1, 1, 1});
    CHECK(series(genfun(2, 3), 2) == std::vector<mpz_class>{1, 2, 6});
    CHECK_THROWS(series(RationalFunction({1}, {0, 1}), 3));
}

TEST_CASE("series matches brute-force plane-partition counts") {
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned r = 1; r <= 3; ++r) {
            auto coeffs = series(genfun(k, r), 10);
            for (unsigned n = 0; n <= 10; ++n) CHECK(coeffs[n] == alpha(k, r, n));
        }
}

TEST_CASE("series coefficients are non-negative and start at 1") {
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned r = 1; r <= 3; ++r) {
            auto coeffs = series(genfun(k, r), 15);
            CHECK(coeffs[0] == 1);
            for (const auto& c : coeffs) CHECK(c >= 0);
        }
}

TEST_CASE("functional equation") {
    CHECK(funceq_check(1, 2));
    for (unsigned r = 1; r <= 4; ++r) CHECK(funceq_check(2, r));
    CHECK(funceq_check(3, 2));
}

TEST_CASE("degree law in reduced form") {
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned r = 1; r <= 3; ++r) {
            auto f = genfun(k, r);
            CHECK(f.num().degree() - f.den().degree() ==
                  -static_cast<int>(staircase_shift(k, r)));
        }
}

TEST_CASE("Cor 1a representability") {
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned r = 1; r <= 3; ++r) {
            IntPolynomial clear{1};
            for (unsigned c = 1; c <= k * r; ++c) clear = clear * one_minus_xc(c);
            clear = pow(clear, k * r);
            CHECK((genfun(k, r) * RationalFunction(clear)).is_polynomial());
        }
}

TEST_CASE("k = 2 refined denominator") {
    for (unsigned r = 2; r <= 4; ++r) {
        IntPolynomial clear = pow(one_minus_xc(1), 2);
        for (unsigned c = 2; c <= r; ++c) clear = clear * pow(one_minus_xc(c), c + 1);
        auto cleared = genfun(2, r) * RationalFunction(clear);
        REQUIRE(cleared.is_polynomial());
        CHECK(cleared.num().degree() == static_cast<int>(r * (3 * r + 2 * r * r - 5) / 6));
    }
}

TEST_CASE("strict-shift identity on the series") {
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned r = 1; r <= 3; ++r) {
            unsigned shift = staircase_shift(k, r);
            auto coeffs = series(genfun(k, r), 12);
            for (unsigned n = 0; n <= 12; ++n) {
                mpz_class expect = n >= shift ? coeffs[n - shift] : mpz_class(0);
                CHECK(enumerate_strict(k, r, n).size() == expect);
            }
        }
}

TEST_CASE("tableau validation") {
    CHECK_THROWS(StandardYoungTableau(2, 2, {1, 2, 3, 3}));
    CHECK_THROWS(StandardYoungTableau(2, 2, {1, 4, 2, 3}));  // column decreases
    CHECK_THROWS(StandardYoungTableau(2, 2, {2, 1, 3, 4}));  // row decreases
    CHECK_NOTHROW(StandardYoungTableau(2, 2, {1, 3, 2, 4}));
    CHECK_NOTHROW(StandardYoungTableau(2, 2, {1, 2, 3, 4}));
}

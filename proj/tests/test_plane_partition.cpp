#include "doctest.h"
#include "pptower/partition.hpp"
#include "pptower/plane_partition.hpp"

#include <cmath>
#include <numbers>
#include <set>

using namespace pptower;

TEST_CASE("enumerate base cases") {
    auto zero = enumerate(3, 2, 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0] == PlanePartition(3, 2));

    CHECK(enumerate(2, 3, 1).size() == 2);  // alpha_{k,r}(1) = k
    CHECK(enumerate(2, 3, 3).size() == 13);
}

TEST_CASE("enumerate yields valid, distinct matrices with the right first-row sum") {
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned r = 1; r <= 3; ++r)
            for (unsigned n = 0; n <= 6; ++n) {
                std::set<std::vector<unsigned>> seen;
                for (const auto& m : enumerate(k, r, n)) {
                    CHECK(m.weakly_decreasing());
                    CHECK(m.first_row_sum() == n);
                    std::vector<unsigned> flat;
                    for (unsigned i = 0; i < k; ++i)
                        for (unsigned j = 0; j < r; ++j) flat.push_back(m.at(i, j));
                    CHECK(seen.insert(flat).second);
                }
            }
}

TEST_CASE("alpha closed forms") {
    for (unsigned k = 1; k <= 6; ++k) {
        CHECK(alpha(k, 3, 0) == 1);
        CHECK(alpha(k, 3, 1) == k);
        CHECK(alpha(k, 1, 2) == k * (k + 1) / 2);
        CHECK(alpha(k, 2, 2) == k * (k + 1));
        CHECK(alpha(k, 4, 2) == k * (k + 1));
    }
    CHECK(alpha(3, 1, 4) == 15);  // binom(6,2)
    CHECK(alpha(2, 2, 2) == 6);
    CHECK(alpha(2, 2, 3) == 9);
    // alpha_{k,1}(n) = binom(n+k-1, k-1)
    for (unsigned k = 1; k <= 5; ++k)
        for (unsigned n = 0; n <= 8; ++n) {
            mpz_class b;
            mpz_bin_uiui(b.get_mpz_t(), n + k - 1, k - 1);
            CHECK(alpha(k, 1, n) == b);
        }
}

TEST_CASE("alpha parallel kernel matches serial reference and enumeration") {
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned r = 1; r <= 3; ++r)
            for (unsigned n = 0; n <= 8; ++n) {
                mpz_class a = alpha(k, r, n);
                CHECK(a == alpha_serial(k, r, n));
                CHECK(a == enumerate(k, r, n).size());
            }
}

TEST_CASE("alpha_table DP agrees with enumeration") {
    for (unsigned k = 1; k <= 4; ++k)
        for (unsigned r = 1; r <= 4; ++r) {
            auto table = alpha_table(k, r, 8);
            for (unsigned n = 0; n <= 8; ++n) CHECK(table[n] == alpha(k, r, n));
        }
}

TEST_CASE("alpha_bar table values and stabilization") {
    CHECK(alpha_bar(2, 4) == 30);
    CHECK(alpha_bar(2, 5) == 58);
    for (unsigned n = 0; n <= 12; ++n) CHECK(alpha_bar(1, n) == q(n));
    // alpha(k,r,n) = alpha_bar(k,n) once r >= n; monotone in r before that
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned n = 0; n <= 12; ++n) {
            auto bar = alpha_bar(k, n);
            for (unsigned r = 1; r <= n + 2; ++r) {
                auto a = alpha_table(k, r, n)[n];
                CHECK(a <= alpha_table(k, r + 1, n)[n]);
                if (r >= n) CHECK(a == bar);
            }
        }
}

TEST_CASE("growth bounds on alpha_bar") {
    for (unsigned k = 1; k <= 5; ++k)
        for (unsigned n = 1; n <= 20; ++n) {
            mpz_class bar = alpha_bar(k, n);
            CHECK(bar >= q(n));
            mpz_class ub;
            mpz_class base = (n + 1) * q(n);
            mpz_pow_ui(ub.get_mpz_t(), base.get_mpz_t(), k);
            CHECK(bar <= ub);
        }
    // alpha_bar_k(k n) >= q(n)^k
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned n = 1; n <= 8; ++n) {
            mpz_class pw;
            mpz_class qn = q(n);
            mpz_pow_ui(pw.get_mpz_t(), qn.get_mpz_t(), k);
            CHECK(alpha_bar(k, k * n) >= pw);
        }
}

TEST_CASE("log alpha_bar envelope") {
    const double pi = std::numbers::pi;
    for (unsigned k = 1; k <= 4; ++k)
        for (unsigned n = 10; n <= 25; ++n) {
            double ratio =
                std::log(alpha_bar(k, n).get_d()) / (pi * std::sqrt(2.0 * n / 3.0));
            // the sqrt(k) growth only binds asymptotically; 0.4 covers
            // the subleading log-correction at these n
            CHECK(ratio >= 0.4 * std::sqrt(static_cast<double>(k)));
            CHECK(ratio <= 1.5 * k);
        }
}

TEST_CASE("strictify staircase") {
    PlanePartition z(2, 2);
    auto s = strictify(z);
    CHECK(s.at(0, 0) == 3);
    CHECK(s.at(0, 1) == 2);
    CHECK(s.at(1, 0) == 2);
    CHECK(s.at(1, 1) == 1);
    CHECK(s.strictly_decreasing());
    CHECK(staircase_shift(2, 2) == 5);
    CHECK(s.first_row_sum() == z.first_row_sum() + staircase_shift(2, 2));
}

TEST_CASE("strictify round-trips and shifts the first-row sum") {
    for (unsigned n = 0; n <= 5; ++n)
        for (const auto& m : enumerate(2, 2, n)) {
            auto s = strictify(m);
            CHECK(s.strictly_decreasing());
            CHECK(s.first_row_sum() == n + staircase_shift(2, 2));
            CHECK(strictify_inverse(s) == m);
        }
}

TEST_CASE("enumerate_strict basics") {
    for (unsigned n = 1; n <= 6; ++n) CHECK(enumerate_strict(1, 1, n).size() == 1);
    for (unsigned n = 0; n < 5; ++n) CHECK(enumerate_strict(2, 2, n).empty());
    CHECK(enumerate_strict(2, 2, 5).size() == 1);
}

TEST_CASE("strict counts equal shifted weak counts") {
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned r = 1; r <= 3; ++r) {
            unsigned shift = staircase_shift(k, r);
            for (unsigned n = 0; n <= 12; ++n) {
                std::size_t strict = enumerate_strict(k, r, n).size();
                mpz_class weak = n >= shift ? alpha(k, r, n - shift) : mpz_class(0);
                CHECK(strict == weak);
            }
        }
}

TEST_CASE("shape validation") {
    CHECK_THROWS(PlanePartition(2, 2, {1, 2, 3}));
    CHECK_THROWS(strictify_inverse(StrictPlanePartition(2, 2)));  // zero matrix is below the staircase
}

#include <doctest.h>

#include "boxdist/bounds.hpp"
#include "oracles.hpp"

using namespace boxdist;

TEST_CASE("count_monomials examples") {
    CHECK(count_monomials(2, 2, 2) == 4);    // saturated: 2^2
    CHECK(count_monomials(3, 3, 2) == 10);
    CHECK(count_monomials(1, 5, 3) == 4);
    CHECK(count_monomials(4, 3, 8) == 81);   // s = n(q-1)
    CHECK(count_monomials(4, 3, 100) == 81); // beyond the cap
    CHECK(count_monomials(3, 2, 0) == 1);
    CHECK_THROWS_AS(count_monomials(0, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(count_monomials(2, 1, 1), std::invalid_argument);
}

TEST_CASE("count_monomials equals exhaustive enumeration") {
    for (unsigned n = 1; n <= 5; ++n)
        for (unsigned q = 2; q <= 4; ++q)
            for (std::uint64_t s = 0; s <= std::uint64_t{n} * (q - 1); ++s)
                CHECK(count_monomials(n, q, s) ==
                      BigInt(static_cast<unsigned long>(oracle::count_monomials_brute(n, q, s))));
}

TEST_CASE("count_monomials complement symmetry") {
    for (unsigned n = 1; n <= 5; ++n)
        for (unsigned q = 2; q <= 5; ++q) {
            const std::uint64_t cap = std::uint64_t{n} * (q - 1);
            BigInt full;
            mpz_ui_pow_ui(full.get_mpz_t(), q, n);
            for (std::uint64_t s = 0; s < cap; ++s)
                CHECK(count_monomials(n, q, s) == full - count_monomials(n, q, cap - s - 1));
        }
}

TEST_CASE("count_monomials monotone in s and q") {
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned q = 2; q <= 5; ++q)
            for (std::uint64_t s = 0; s <= std::uint64_t{n} * (q - 1); ++s) {
                CHECK(count_monomials(n, q, s) <= count_monomials(n, q, s + 1));
                CHECK(count_monomials(n, q, s) <= count_monomials(n, q + 1, s));
            }
}

TEST_CASE("bbs_bound examples") {
    CHECK(bbs_bound(2, 1) == 3);
    CHECK(bbs_bound(3, 2) == 10);
    CHECK(bbs_bound(7, 0) == 1);
    CHECK(deza_frankl_bound(2, 1) == 3);
    CHECK(deza_frankl_bound(3, 2) == 10);
    CHECK(deza_frankl_bound(5, 0) == 1);
}

TEST_CASE("dgs_bound examples and rejects") {
    CHECK(dgs_bound(3, 2) == 9);
    CHECK(dgs_bound(2, 1) == 3);
    CHECK(dgs_bound(4, 1) == 5);
    CHECK_THROWS_AS(dgs_bound(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(dgs_bound(3, 0), std::invalid_argument);
}

TEST_CASE("clp_threshold examples") {
    CHECK(clp_threshold(4, 4) == 22);  // 2(1+4+6)
    CHECK(clp_threshold(9, 0) == 2);
    CHECK(clp_threshold(5, 2) == 12);  // 2(1+5)
    CHECK(clp_threshold(3, 9) == 16);  // floor(9/2)=4 > n: full 2*2^3
}

TEST_CASE("main_theorem_bound and dfrank_box_bound examples") {
    CHECK(main_theorem_bound(2, 2, 1) == 6);
    CHECK(main_theorem_bound(3, 2, 1) == 8);
    CHECK(main_theorem_bound(4, 3, 8) == 162);  // saturated cap: 2*3^4
    CHECK(dfrank_box_bound(2, 2, 1) == 3);
    CHECK(dfrank_box_bound(3, 3, 2) == 10);
    CHECK(dfrank_box_bound(6, 4, 0) == 1);
}

TEST_CASE("q=2 counting identity: box monomials vs CLP threshold") {
    for (unsigned n = 1; n <= 8; ++n)
        for (std::uint64_t s = 0; s <= n; ++s) {
            BigInt sum = 0;
            for (std::uint64_t i = 0; i <= s && i <= n; ++i) {
                BigInt b;
                mpz_bin_uiui(b.get_mpz_t(), n, static_cast<unsigned long>(i));
                sum += b;
            }
            CHECK(main_theorem_bound(n, 2, s) == 2 * sum);
            CHECK(main_theorem_bound(n, 2, s) == clp_threshold(n, 2 * s));
        }
}

TEST_CASE("box monomial count is bbs count when s <= q-1") {
    for (unsigned n = 1; n <= 5; ++n)
        for (unsigned q = 2; q <= 6; ++q)
            for (std::uint64_t s = 0; s <= q - 1; ++s) {
                CHECK(main_theorem_bound(n, q, s) <= 2 * bbs_bound(n, s));
                CHECK(dfrank_box_bound(n, q, s) == bbs_bound(n, s));
            }
}

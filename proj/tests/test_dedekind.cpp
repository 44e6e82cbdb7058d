#include "doctest.h"

#include <numeric>

#include "overcubic/dedekind.hpp"

using namespace overcubic;

TEST_SUITE("dedekind") {

TEST_CASE("defining-sum values") {
    CHECK(dedekind_sum_direct(1, 1) == 0);  // empty sum
    CHECK(dedekind_sum_direct(1, 3) == mpq_class(1, 18));
    CHECK(dedekind_sum_direct(2, 3) == mpq_class(-1, 18));
    CHECK(dedekind_sum_direct(1, 2) == 0);
    CHECK(dedekind_sum_direct(5, 7) == mpq_class(-1, 14));
    CHECK(dedekind_sum_direct(-1, 3) == mpq_class(-1, 18));  // reduced mod k
    CHECK_THROWS_AS(dedekind_sum_direct(1, 0), std::domain_error);
}

TEST_CASE("fast path equals the defining sum") {
    CHECK(dedekind_sum(1, 3) == mpq_class(1, 18));
    CHECK(dedekind_sum(1, 2) == 0);
    CHECK(dedekind_sum(5, 7) == dedekind_sum_direct(5, 7));
    for (long k = 1; k <= 120; ++k)
        for (long h = 0; h < k; ++h) {
            if (std::gcd(h, k) != 1) continue;
            REQUIRE(dedekind_sum(h, k) == dedekind_sum_direct(h, k));
        }
    CHECK_THROWS_AS(dedekind_sum(2, 4), not_coprime_error);
}

TEST_CASE("reciprocity law for all coprime pairs up to 200") {
    for (long k = 2; k <= 200; ++k)
        for (long h = 1; h < k; ++h) {
            if (std::gcd(h, k) != 1) continue;
            mpq_class lhs = dedekind_sum(h, k) + dedekind_sum(k, h);
            mpq_class rhs =
                mpq_class(-1, 4) + mpq_class(mpz_class(h) * h + mpz_class(k) * k + 1,
                                             12 * mpz_class(h) * k);
            rhs.canonicalize();
            REQUIRE(lhs == rhs);
        }
}

TEST_CASE("inverse residues leave the sum unchanged") {
    // s(h,k) == s(h1,k) whenever h h1 == 1 (mod k)
    for (long k = 2; k <= 200; ++k)
        for (long h = 1; h < k; ++h) {
            if (std::gcd(h, k) != 1) continue;
            long h1 = inverse_mod(h, k, +1);
            REQUIRE(dedekind_sum(h, k) == dedekind_sum(h1, k));
        }
}

TEST_CASE("denominator divides 6k and oddness") {
    for (long k = 1; k <= 200; ++k)
        for (long h = 1; h < k; ++h) {
            if (std::gcd(h, k) != 1) continue;
            mpq_class s = dedekind_sum(h, k);
            mpz_class six_k = 6 * mpz_class(k);
            REQUIRE(six_k % s.get_den() == 0);
            REQUIRE(dedekind_sum(k - h, k) == -s);
        }
}

TEST_CASE("modular inverses") {
    CHECK(inverse_mod(2, 5, -1) == 2);  // 4 == -1 (mod 5)
    CHECK(inverse_mod(1, 1, -1) == 0);
    CHECK(inverse_mod(3, 7, +1) == 5);
    CHECK_THROWS_AS(inverse_mod(2, 4, 1), not_coprime_error);
    // exhaustive oracle on small moduli
    for (long k = 1; k <= 50; ++k)
        for (long a = 0; a < k; ++a) {
            if (std::gcd(a, k) != 1) continue;
            for (int target : {1, -1}) {
                long x = inverse_mod(a, k, target);
                REQUIRE(x >= 0);
                REQUIRE(x < k);
                REQUIRE(((a * x - target) % k + k) % k == 0);
            }
        }
}

}  // TEST_SUITE

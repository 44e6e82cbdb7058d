#include "doctest.h"

#include "overcubic/bessel.hpp"

using namespace overcubic;

namespace {

// Independent route: fixed-term-count summation of the ascending series at
// doubled working precision (no adaptive stopping rule shared with the
// implementation).
Ball bessel_reference(int order, long x_num, long x_den, long terms, long digits) {
    long prec = digits_to_bits(2 * digits);
    Ball x = Ball::from_mpq(mpq_class(x_num, x_den), prec);
    Ball u = x / Ball::from_long(2, prec);
    Ball usq = u * u;
    Ball term = (order == 1) ? u : usq / Ball::from_long(2, prec);
    Ball sum = term;
    for (long m = 0; m < terms; ++m) {
        term = term * usq / Ball::from_long((m + 1) * (m + 1 + order), prec);
        sum = sum + term;
    }
    return sum;  // truncated from below; compared one-sidedly
}

bool overlaps(const Ball& a, const Ball& b) {
    return certified_lt(a, b) != Cert::Yes && certified_lt(b, a) != Cert::Yes;
}

}  // namespace

TEST_SUITE("bessel") {

TEST_CASE("I_2(0) is exactly zero") {
    Ball z = Ball::from_long(0, 128);
    Ball v = bessel_I(2, z, 30);
    CHECK(v.contains_zero());
    CHECK(v.upper_double() == 0.0);
    CHECK_THROWS_AS(bessel_I(2, Ball::from_long(-1, 128), 30), std::domain_error);
    CHECK_THROWS_AS(bessel_I(3, z, 30), std::domain_error);
}

TEST_CASE("reference digits at small arguments") {
    // values pinned from an independent 50-digit summation of the series
    Ball i2_1 = bessel_I(2, Ball::from_long(1, digits_to_bits(50)), 50);
    CHECK(i2_1.str(16) == std::string("0.1357476697670383"));
    Ball i1_2 = bessel_I(1, Ball::from_long(2, digits_to_bits(50)), 50);
    CHECK(i1_2.str(16) == std::string("1.590636854637329"));
    // and the independent summation agrees within combined radii
    CHECK(overlaps(i2_1, bessel_reference(2, 1, 1, 60, 50)));
    CHECK(overlaps(i1_2, bessel_reference(1, 2, 1, 60, 50)));
}

TEST_CASE("two truncation strategies agree") {
    for (long s : {1L, 5L, 10L, 25L, 60L}) {
        Ball lib = bessel_I(2, Ball::from_long(s, digits_to_bits(40)), 40);
        Ball ref = bessel_reference(2, s, 1, 4 * s + 120, 40);
        REQUIRE(overlaps(lib, ref));
    }
}

TEST_CASE("envelope polynomial is exact on rationals") {
    CHECK(i2_envelope(mpq_class(1)) == mpq_class(284599, 262144));
    // plain plug-in at s = -1: 1 + 15/8 + 105/128 - 315/1024 + 10395/32768
    //                          - 135135/262144, summed literally
    mpq_class expect = mpq_class(1) + mpq_class(15, 8) + mpq_class(105, 128) -
                       mpq_class(315, 1024) + mpq_class(10395, 32768) -
                       mpq_class(135135, 262144);
    CHECK(i2_envelope(mpq_class(-1)) == expect);
    CHECK_THROWS_AS(i2_envelope(mpq_class(0)), std::domain_error);
    // ball version contains the exact rational value at s = 25
    Ball b = i2_envelope(Ball::from_long(25, digits_to_bits(40)));
    CHECK(b.contains(Ball::from_mpq(i2_envelope(mpq_class(25)), 256)));
}

TEST_CASE("bound families hold on the paper ranges") {
    for (long s : {25L, 30L, 1000L}) {
        BesselBoundsReport rep = check_i2_bounds(mpq_class(s), 40);
        INFO("s = " << s);
        REQUIRE(rep.all_applicable_hold());
        if (s >= 30) CHECK(rep.lower30 == Cert::Yes);
        if (s >= 25) {
            CHECK(rep.sandwich_lower == Cert::Yes);
            CHECK(rep.sandwich_upper == Cert::Yes);
        }
    }
    BesselBoundsReport at10 = check_i2_bounds(mpq_class(10), 40);
    CHECK(!at10.sandwich_applicable);
    CHECK(!at10.lower30_applicable);
    CHECK(at10.envelope_lower == Cert::Yes);
    CHECK(at10.envelope_upper == Cert::Yes);
    CHECK_THROWS_AS(check_i2_bounds(mpq_class(9), 30), std::domain_error);
}

TEST_CASE("tail majorant") {
    long digits = 40;
    long prec = digits_to_bits(digits);
    Ball s = Ball::pi(prec) * sqrt(Ball::from_long(150, prec));
    Ball t5 = tail_majorant(s, 5, digits);
    CHECK(t5.lower_double() > 0.0);
    // the majorant really does dominate a long partial tail
    Ball partial(prec);
    for (long j = 6; j <= 200; ++j)
        partial = partial + bessel_I(2, s / Ball::from_long(j, prec), digits);
    CHECK(certified_le(partial, t5) == Cert::Yes);

    // Values at N in {5,10,20,40}: 389.823, 44.1808, 30.7949, 44.8082.
    // The bound is not monotone in N: it dips to its minimum near N ~ s/2.2
    // and grows roughly linearly beyond, so the last step rises again.
    Ball t10 = tail_majorant(s, 10, digits);
    Ball t20 = tail_majorant(s, 20, digits);
    Ball t40 = tail_majorant(s, 40, digits);
    CHECK(std::abs(t5.mid_double() - 389.822996) < 1e-3);
    CHECK(std::abs(t10.mid_double() - 44.180829) < 1e-4);
    CHECK(std::abs(t20.mid_double() - 30.794918) < 1e-4);
    CHECK(std::abs(t40.mid_double() - 44.808217) < 1e-4);
    CHECK(certified_lt(t10, t5) == Cert::Yes);
    CHECK(certified_lt(t20, t10) == Cert::Yes);
    CHECK(certified_lt(t20, t40) == Cert::Yes);

    // (s=1, N=1) reduces to 2 I_1(1)
    Ball one = Ball::from_long(1, prec);
    Ball lhs = tail_majorant(one, 1, digits);
    Ball rhs = Ball::from_long(2, prec) * bessel_I(1, one, digits);
    CHECK(overlaps(lhs, rhs));
}

TEST_CASE("inclusion monotonicity under precision doubling") {
    Ball lo = bessel_I(2, Ball::from_long(25, digits_to_bits(20)), 20);
    Ball hi = bessel_I(2, Ball::from_long(25, digits_to_bits(40)), 40);
    CHECK(lo.contains(hi));
    CHECK(hi.rad_double() <= lo.rad_double());
}

}  // TEST_SUITE

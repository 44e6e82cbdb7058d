#include "overcubic/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace overcubic {

Ball bessel_I(int order, const Ball& x, long digits) {
    if (order != 1 && order != 2)
        throw std::domain_error("bessel_I: order must be 1 or 2");
    if (x.lower_double() < 0.0)
        throw std::domain_error("bessel_I: argument must be >= 0");

    // series terms peak near e^x, so carry enough bits for the target digits
    // on top of that scale
    double xd = x.upper_double();
    long prec = digits_to_bits(digits + 15 + static_cast<long>(xd / 2.302585)) + 32;

    Ball half = Ball::from_mpq(mpq_class(1, 2), prec);
    Ball u = x * half;
    Ball usq = u * u;
    Ball term = (order == 1) ? u : usq * half;  // m = 0 term: (x/2)^nu / nu!
    Ball sum = term;
    Ball one = Ball::from_long(1, prec);

    // stop once the geometric remainder bound drops below the target
    mpfr_t target;
    mpfr_init2(target, 32);
    {
        mpfr_t su;
        mpfr_init2(su, 32);
        sum.upper(su);
        mpfr_abs(su, su, MPFR_RNDU);
        mpfr_set_ui_2exp(target, 1, -digits_to_bits(digits) - 8, MPFR_RNDU);
        mpfr_mul(target, target, su, MPFR_RNDU);
        // absolute floor so tiny arguments terminate too
        mpfr_t floor_abs;
        mpfr_init2(floor_abs, 32);
        mpfr_set_ui_2exp(floor_abs, 1, -digits_to_bits(digits + 10 + static_cast<long>(xd / 2.302585)), MPFR_RNDU);
        mpfr_max(target, target, floor_abs, MPFR_RNDU);
        mpfr_clear(floor_abs);
        mpfr_clear(su);
    }

    Ball remainder(prec);
    for (long m = 0;; ++m) {
        // t_{m+1} = t_m * (x/2)^2 / ((m+1)(m+1+order))
        Ball denom = Ball::from_long((m + 1) * (m + 1 + order), prec);
        term = term * usq / denom;
        sum = sum + term;
        // ratio of consecutive terms from here on is at most
        // (x/2)^2 / ((m+2)(m+2+order)); once < 1, remainder <= t * r/(1-r)
        Ball next_denom = Ball::from_long((m + 2) * (m + 2 + order), prec);
        Ball ratio = usq / next_denom;
        double r_hi = ratio.upper_double();
        if (r_hi < 0.5) {
            mpfr_t tu;
            mpfr_init2(tu, 32);
            term.upper(tu);
            mpfr_mul_d(tu, tu, r_hi / (1.0 - r_hi) * 1.0000001, MPFR_RNDU);
            bool done = mpfr_cmp(tu, target) <= 0;
            if (done) {
                // fold the remainder into the radius
                mpfr_t lo, hi;
                mpfr_init2(lo, prec);
                mpfr_init2(hi, prec);
                sum.lower(lo);
                sum.upper(hi);
                mpfr_add(hi, hi, tu, MPFR_RNDU);
                remainder = Ball::from_endpoints(lo, hi, prec);
                mpfr_clear(lo);
                mpfr_clear(hi);
                mpfr_clear(tu);
                break;
            }
            mpfr_clear(tu);
        }
        if (m > 4'000'000)
            throw std::runtime_error("bessel_I: series did not terminate");
    }
    mpfr_clear(target);
    return remainder;
}

mpq_class i2_envelope(const mpq_class& s) {
    if (s == 0) throw std::domain_error("i2_envelope: s must be nonzero");
    mpq_class inv = 1 / s;
    mpq_class r = mpq_class(135135, 262144);
    r = r * inv + mpq_class(10395, 32768);
    r = r * inv + mpq_class(315, 1024);
    r = r * inv + mpq_class(105, 128);
    r = r * inv - mpq_class(15, 8);
    r = r * inv + 1;
    r.canonicalize();
    return r;
}

Ball i2_envelope(const Ball& s) {
    if (s.contains_zero())
        throw std::domain_error("i2_envelope: s interval contains zero");
    mpfr_prec_t prec = s.precision();
    Ball one = Ball::from_long(1, prec);
    Ball inv = one / s;
    Ball r = Ball::from_mpq(mpq_class(135135, 262144), prec);
    r = r * inv + Ball::from_mpq(mpq_class(10395, 32768), prec);
    r = r * inv + Ball::from_mpq(mpq_class(315, 1024), prec);
    r = r * inv + Ball::from_mpq(mpq_class(105, 128), prec);
    r = r * inv - Ball::from_mpq(mpq_class(15, 8), prec);
    r = r * inv + one;
    return r;
}

bool BesselBoundsReport::all_applicable_hold() const {
    if (sandwich_applicable &&
        (sandwich_lower != Cert::Yes || sandwich_upper != Cert::Yes))
        return false;
    if (lower30_applicable && lower30 != Cert::Yes) return false;
    return envelope_lower == Cert::Yes && envelope_upper == Cert::Yes;
}

BesselBoundsReport check_i2_bounds(const mpq_class& s, long digits) {
    if (s < 10) throw std::domain_error("check_i2_bounds: s must be >= 10");
    long prec = digits_to_bits(digits + static_cast<long>(mpq_get_d(s.get_mpq_t()) / 2.302585) + 10);
    Ball sb = Ball::from_mpq(s, prec);
    Ball i2 = bessel_I(2, sb, digits + static_cast<long>(mpq_get_d(s.get_mpq_t()) / 2.302585) + 10);
    Ball two_pi = Ball::from_long(2, prec) * Ball::pi(prec);
    Ball amp = exp(sb) / sqrt(two_pi * sb);  // e^s / sqrt(2 pi s)
    Ball one = Ball::from_long(1, prec);
    Ball two = Ball::from_long(2, prec);

    BesselBoundsReport rep;
    if (s >= 25) {
        rep.sandwich_applicable = true;
        Ball env = i2_envelope(sb);
        Ball slack = Ball::from_long(31, prec) / pow_q(sb, mpq_class(6));
        rep.sandwich_lower = certified_le(amp * (env - slack), i2);
        rep.sandwich_upper = certified_le(i2, amp * (env + slack));
    }
    if (s >= 30) {
        rep.lower30_applicable = true;
        rep.lower30 = certified_le(amp / (one + two / sb), i2);
    }
    rep.envelope_lower = certified_lt(amp * (one - two / sb), i2);
    rep.envelope_upper = certified_lt(
        i2, amp * (one - Ball::from_mpq(mpq_class(15, 8), prec) / sb + two / (sb * sb)));
    return rep;
}

Ball tail_majorant(const Ball& s, long N, long digits) {
    if (N < 1) throw std::domain_error("tail_majorant: N must be >= 1");
    if (s.lower_double() <= 0.0)
        throw std::domain_error("tail_majorant: s must be positive");
    mpfr_prec_t prec = std::max<mpfr_prec_t>(s.precision(), digits_to_bits(digits));
    Ball nb = Ball::from_long(N, prec);
    Ball sb = s;
    Ball i1 = bessel_I(1, sb / nb, digits);
    return Ball::from_long(2, prec) * nb * nb / sb * i1;
}

}  // namespace overcubic

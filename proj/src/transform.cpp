#include "overcubic/transform.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "overcubic/dedekind.hpp"

namespace overcubic {

namespace {

mpq_class frac(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

// e^{2 pi i r} e^{-2 pi w}: the point q = e^{2 pi i (r + i w)} with exact
// rational cusp r and complex ball w, Re(w) > 0.
BallComplex cusp_point(const mpq_class& r, const BallComplex& w, long prec) {
    BallComplex phase = BallComplex::unit_phase(2 * r, prec);
    Ball minus_two_pi = -(Ball::from_long(2, prec) * Ball::pi(prec));
    BallComplex decay = exp(BallComplex(minus_two_pi * w.re, minus_two_pi * w.im));
    return phase * decay;
}

}  // namespace

BallComplex eval_f(const BallComplex& q, long digits) {
    long prec = digits_to_bits(digits);
    Ball qabs = abs(q);
    double qa = qabs.upper_double();
    if (!(qa <= 0.999))
        throw std::domain_error("eval_f: |q| too close to 1");

    // factors until the log tail |q|^{K+1}/(1-|q|)^2 is below target
    double target_log2 = -(digits * 3.3219280948873626 + 24.0);
    long K = 16;
    if (qa > 1e-60) {
        double l2q = std::log2(qa);
        double corr = 2.0 * std::log2(1.0 - qa);
        K = static_cast<long>((target_log2 + corr) / l2q) + 2;
        if (K < 16) K = 16;
    }

    BallComplex prod = BallComplex::from_real(Ball::from_long(1, prec));
    BallComplex one = BallComplex::from_real(Ball::from_long(1, prec));
    if (qa <= 0.5) {
        // repeated multiplication keeps radii shrinking for small |q|
        BallComplex qk = one;
        for (long k = 1; k <= K; ++k) {
            qk = qk * q;
            prod = prod * (one - qk);
        }
    } else {
        /* Near the unit circle the rectangular product q^k = q^{k-1} q
         * compounds radii by |Re q| + |Im q| (> 1 here), so powers are
         * taken in polar form instead: magnitude by real multiplication,
         * phase angle scaled exactly by k. */
        Ball theta = arg(q);
        Ball magk = Ball::from_long(1, prec);
        for (long k = 1; k <= K; ++k) {
            magk = magk * qabs;
            Ball ang = theta * Ball::from_long(k, prec);
            BallComplex qk{cos(ang) * magk, sin(ang) * magk};
            prod = prod * (one - qk);
        }
    }
    BallComplex f = one / prod;

    // the omitted factors multiply f by e^theta with
    // |theta| <= |q|^{K+1} / (1-|q|)^2 =: b, a complex perturbation of
    // relative size at most e^b - 1; widen both components by it
    Ball one_r = Ball::from_long(1, prec);
    Ball b(prec);
    if (qa > 0.0) {
        mpfr_t pw, den;
        mpfr_init2(pw, prec);
        mpfr_init2(den, prec);
        qabs.upper(pw);
        mpfr_pow_ui(pw, pw, static_cast<unsigned long>(K + 1), MPFR_RNDU);
        qabs.upper(den);
        mpfr_ui_sub(den, 1, den, MPFR_RNDD);
        mpfr_sqr(den, den, MPFR_RNDD);
        mpfr_div(pw, pw, den, MPFR_RNDU);
        mpfr_t z0;
        mpfr_init2(z0, prec);
        mpfr_set_zero(z0, 1);
        b = Ball::from_endpoints(z0, pw, prec);
        mpfr_clear(z0);
        mpfr_clear(pw);
        mpfr_clear(den);
    }
    Ball rel = (exp(b) - one_r).upper_ball();
    Ball err = (abs(f) * rel).upper_ball();
    mpfr_t neg, pos;
    mpfr_init2(neg, prec);
    mpfr_init2(pos, prec);
    err.upper(pos);
    mpfr_neg(neg, pos, MPFR_RNDD);
    Ball widen = Ball::from_endpoints(neg, pos, prec);
    mpfr_clear(neg);
    mpfr_clear(pos);
    return BallComplex(f.re + widen, f.im + widen);
}

namespace {

struct CaseParts {
    BallComplex lhs;
    BallComplex rhs;
};

BallComplex f_at(const mpq_class& r, const BallComplex& w, long prec, long digits) {
    return eval_f(cusp_point(r, w, prec), digits);
}

CaseParts build_case(const TransformCase& c, const mpq_class& phase_offset) {
    long h = c.h, k = c.k;
    if (k < 1) throw std::domain_error("verify_transformation: k must be >= 1");
    if (std::gcd(((h % k) + k) % k, k) != 1 && k != 1)
        throw std::domain_error("verify_transformation: gcd(h,k) != 1");
    if (c.z.re.lower_double() <= 0.0)
        throw std::domain_error("verify_transformation: Re(z) must be > 0");
    long prec = digits_to_bits(c.digits);
    long digits = c.digits;

    Ball pi = Ball::pi(prec);
    Ball kb = Ball::from_long(k, prec);
    BallComplex z = c.z;
    Ball one = Ball::from_long(1, prec);
    BallComplex z_over_k2 = z / (kb * kb);
    BallComplex inv_z = BallComplex::from_real(one) / z;

    auto sqrt_c = [&](const BallComplex& w) { return sqrt_principal(w); };
    auto scaled = [&](const BallComplex& w, const mpq_class& s) {
        Ball sb = Ball::from_mpq(s, prec);
        return BallComplex(w.re * sb, w.im * sb);
    };
    // exp((pi/(12k)) * (alpha/z - beta*z/k)) with rational alpha, beta
    auto exp_linkage = [&](const mpq_class& denom_coeff, const mpq_class& alpha,
                           const mpq_class& beta) {
        BallComplex t = scaled(inv_z, alpha) - scaled(z / kb, beta);
        Ball coeff = pi * Ball::from_mpq(denom_coeff, prec) / kb;
        return exp(BallComplex(t.re * coeff, t.im * coeff));
    };

    CaseParts parts;
    switch (c.target) {
        case TransformTarget::F: {
            long h1 = inverse_mod(h, k, -1);
            parts.lhs = f_at(frac(h, k), z_over_k2, prec, digits);
            BallComplex phase =
                BallComplex::unit_phase(dedekind_sum(h, k) + phase_offset, prec);
            parts.rhs = sqrt_c(z / kb) * phase * exp_linkage(frac(1, 12), mpq_class(k), 1) *
                        f_at(frac(h1, k), inv_z, prec, digits);
            break;
        }
        case TransformTarget::F2Odd: {
            if (k % 2 == 0) throw std::domain_error("F2Odd: k must be odd");
            long h2 = inverse_mod((2 * h) % k, k, -1);
            parts.lhs = f_at(frac(2 * h, k), scaled(z_over_k2, 2), prec, digits);
            BallComplex phase =
                BallComplex::unit_phase(dedekind_sum((2 * h) % k, k) + phase_offset, prec);
            parts.rhs = sqrt_c(scaled(z, 2) / kb) * phase *
                        exp_linkage(frac(1, 12), frac(k, 2), 2) *
                        f_at(frac(h2, k), scaled(inv_z, frac(1, 2)), prec, digits);
            break;
        }
        case TransformTarget::F2Even: {
            if (k % 2 != 0) throw std::domain_error("F2Even: k must be even");
            long h3 = inverse_mod(h % (k / 2), k / 2, -1);
            parts.lhs = f_at(frac(2 * h, k), scaled(z_over_k2, 2), prec, digits);
            BallComplex phase =
                BallComplex::unit_phase(dedekind_sum(h % (k / 2), k / 2) + phase_offset, prec);
            parts.rhs = sqrt_c(z / kb) * phase * exp_linkage(frac(1, 6), mpq_class(k), 1) *
                        f_at(frac(2 * h3, k), scaled(inv_z, 2), prec, digits);
            break;
        }
        case TransformTarget::F4Odd: {
            if (k % 2 == 0) throw std::domain_error("F4Odd: k must be odd");
            long h4 = inverse_mod((4 * h) % k, k, -1);
            parts.lhs = f_at(frac(4 * h, k), scaled(z_over_k2, 4), prec, digits);
            BallComplex phase =
                BallComplex::unit_phase(dedekind_sum((4 * h) % k, k) + phase_offset, prec);
            parts.rhs = sqrt_c(scaled(z, 4) / kb) * phase *
                        exp_linkage(frac(1, 12), frac(k, 4), 4) *
                        f_at(frac(h4, k), scaled(inv_z, frac(1, 4)), prec, digits);
            break;
        }
        case TransformTarget::F4TwoMod4: {
            if (k % 4 != 2) throw std::domain_error("F4TwoMod4: k must be 2 mod 4");
            long h5 = inverse_mod((2 * h) % (k / 2), k / 2, -1);
            parts.lhs = f_at(frac(4 * h, k), scaled(z_over_k2, 4), prec, digits);
            BallComplex phase = BallComplex::unit_phase(
                dedekind_sum((2 * h) % (k / 2), k / 2) + phase_offset, prec);
            parts.rhs = sqrt_c(scaled(z, 2) / kb) * phase *
                        exp_linkage(frac(1, 12), mpq_class(k), 4) *
                        f_at(frac(2 * h5, k), inv_z, prec, digits);
            break;
        }
        case TransformTarget::F4ZeroMod4: {
            if (k % 4 != 0) throw std::domain_error("F4ZeroMod4: k must be 0 mod 4");
            long h6 = inverse_mod(h % (k / 4), k / 4, -1);
            parts.lhs = f_at(frac(4 * h, k), scaled(z_over_k2, 4), prec, digits);
            BallComplex phase = BallComplex::unit_phase(
                dedekind_sum(h % (k / 4), k / 4) + phase_offset, prec);
            parts.rhs = sqrt_c(z / kb) * phase * exp_linkage(frac(1, 3), mpq_class(k), 1) *
                        f_at(frac(4 * h6, k), scaled(inv_z, 4), prec, digits);
            break;
        }
        case TransformTarget::AOdd: {
            if (k % 2 == 0) throw std::domain_error("AOdd: k must be odd");
            long h1 = inverse_mod(h, k, -1);
            long h2 = inverse_mod((2 * h) % k, k, -1);
            long h4 = inverse_mod((4 * h) % k, k, -1);
            BallComplex fq = f_at(frac(h, k), z_over_k2, prec, digits);
            BallComplex fq2 = f_at(frac(2 * h, k), scaled(z_over_k2, 2), prec, digits);
            BallComplex fq4 = f_at(frac(4 * h, k), scaled(z_over_k2, 4), prec, digits);
            parts.lhs = fq * fq * fq2 / fq4;
            mpq_class phi = 2 * dedekind_sum(h, k) + dedekind_sum((2 * h) % k, k) -
                            dedekind_sum((4 * h) % k, k) + phase_offset;
            BallComplex growth =
                exp(BallComplex(Ball::from_long(3, prec) * pi / Ball::from_long(16, prec) * inv_z.re,
                                Ball::from_long(3, prec) * pi / Ball::from_long(16, prec) * inv_z.im));
            parts.rhs = z / (kb * sqrt(Ball::from_long(2, prec))) *
                        BallComplex::unit_phase(phi, prec) * growth *
                        f_at(frac(h1, k), inv_z, prec, digits) *
                        f_at(frac(h1, k), inv_z, prec, digits) *
                        f_at(frac(h2, k), scaled(inv_z, frac(1, 2)), prec, digits) /
                        f_at(frac(h4, k), scaled(inv_z, frac(1, 4)), prec, digits);
            break;
        }
        case TransformTarget::ATwoMod4: {
            if (k % 4 != 2) throw std::domain_error("ATwoMod4: k must be 2 mod 4");
            long h1 = inverse_mod(h, k, -1);
            long h3 = inverse_mod(h % (k / 2), k / 2, -1);
            long h5 = inverse_mod((2 * h) % (k / 2), k / 2, -1);
            BallComplex fq = f_at(frac(h, k), z_over_k2, prec, digits);
            BallComplex fq2 = f_at(frac(2 * h, k), scaled(z_over_k2, 2), prec, digits);
            BallComplex fq4 = f_at(frac(4 * h, k), scaled(z_over_k2, 4), prec, digits);
            parts.lhs = fq * fq * fq2 / fq4;
            mpq_class phi = 2 * dedekind_sum(h, k) + dedekind_sum(h % (k / 2), k / 2) -
                            dedekind_sum((2 * h) % (k / 2), k / 2) + phase_offset;
            BallComplex growth =
                exp(BallComplex(pi / Ball::from_long(4, prec) * inv_z.re,
                                pi / Ball::from_long(4, prec) * inv_z.im));
            parts.rhs = z / (kb * sqrt(Ball::from_long(2, prec))) *
                        BallComplex::unit_phase(phi, prec) * growth *
                        f_at(frac(h1, k), inv_z, prec, digits) *
                        f_at(frac(h1, k), inv_z, prec, digits) *
                        f_at(frac(2 * h3, k), scaled(inv_z, 2), prec, digits) /
                        f_at(frac(2 * h5, k), inv_z, prec, digits);
            break;
        }
        case TransformTarget::AZeroMod4: {
            if (k % 4 != 0) throw std::domain_error("AZeroMod4: k must be 0 mod 4");
            long h1 = inverse_mod(h, k, -1);
            long h3 = inverse_mod(h % (k / 2), k / 2, -1);
            long h6 = inverse_mod(h % (k / 4), k / 4, -1);
            BallComplex fq = f_at(frac(h, k), z_over_k2, prec, digits);
            BallComplex fq2 = f_at(frac(2 * h, k), scaled(z_over_k2, 2), prec, digits);
            BallComplex fq4 = f_at(frac(4 * h, k), scaled(z_over_k2, 4), prec, digits);
            parts.lhs = fq * fq * fq2 / fq4;
            mpq_class phi = 2 * dedekind_sum(h, k) + dedekind_sum(h % (k / 2), k / 2) -
                            dedekind_sum(h % (k / 4), k / 4) + phase_offset;
            parts.rhs = z / kb * BallComplex::unit_phase(phi, prec) *
                        f_at(frac(h1, k), inv_z, prec, digits) *
                        f_at(frac(h1, k), inv_z, prec, digits) *
                        f_at(frac(2 * h3, k), scaled(inv_z, 2), prec, digits) /
                        f_at(frac(4 * h6, k), scaled(inv_z, 4), prec, digits);
            break;
        }
    }
    return parts;
}

}  // namespace

Ball verify_transformation(const TransformCase& c) {
    CaseParts parts = build_case(c, mpq_class(0));
    return abs(parts.lhs - parts.rhs);
}

Ball verify_transformation_corrupted(const TransformCase& c) {
    mpq_class offset(1, 6 * c.k);
    offset.canonicalize();
    CaseParts parts = build_case(c, offset);
    return abs(parts.lhs - parts.rhs);
}

}  // namespace overcubic

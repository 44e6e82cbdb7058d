#include "overcubic/ball.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

namespace overcubic {

namespace {

constexpr mpfr_prec_t kRadPrec = 32;

struct ScratchReal {
    mpfr_t x;
    explicit ScratchReal(mpfr_prec_t prec) { mpfr_init2(x, prec); }
    ~ScratchReal() { mpfr_clear(x); }
    ScratchReal(const ScratchReal&) = delete;
    ScratchReal& operator=(const ScratchReal&) = delete;
};

}  // namespace

long digits_to_bits(long digits) {
    if (digits < 2) digits = 2;
    // log2(10) = 3.3219...; extra guard bits for intermediate rounding
    return static_cast<long>(digits * 3.3219280948873626) + 32;
}

Ball::Ball() : Ball(128) {}

Ball::Ball(mpfr_prec_t prec_bits) {
    mpfr_init2(mid_, prec_bits);
    mpfr_init2(rad_, kRadPrec);
    mpfr_set_zero(mid_, 1);
    mpfr_set_zero(rad_, 1);
}

Ball::Ball(const Ball& other) {
    mpfr_init2(mid_, mpfr_get_prec(other.mid_));
    mpfr_init2(rad_, kRadPrec);
    mpfr_set(mid_, other.mid_, MPFR_RNDN);
    mpfr_set(rad_, other.rad_, MPFR_RNDU);
}

Ball::Ball(Ball&& other) noexcept {
    mpfr_init2(mid_, 2);
    mpfr_init2(rad_, kRadPrec);
    mpfr_swap(mid_, other.mid_);
    mpfr_swap(rad_, other.rad_);
}

Ball& Ball::operator=(const Ball& other) {
    if (this != &other) {
        mpfr_set_prec(mid_, mpfr_get_prec(other.mid_));
        mpfr_set(mid_, other.mid_, MPFR_RNDN);
        mpfr_set(rad_, other.rad_, MPFR_RNDU);
    }
    return *this;
}

Ball& Ball::operator=(Ball&& other) noexcept {
    if (this != &other) {
        mpfr_swap(mid_, other.mid_);
        mpfr_swap(rad_, other.rad_);
    }
    return *this;
}

Ball::~Ball() {
    mpfr_clear(mid_);
    mpfr_clear(rad_);
}

mpfr_prec_t Ball::precision() const { return mpfr_get_prec(mid_); }

void Ball::add_rad(mpfr_ptr rad, mpfr_srcptr extra) {
    mpfr_add(rad, rad, extra, MPFR_RNDU);
}

/* Accounts for the rounding of the last midpoint operation: one ulp of the
 * result, added to the radius. A rounded-to-zero result would leave the
 * error unbounded, so it is rejected (never reachable in this code base's
 * exponent ranges). */
void Ball::bump_rad_ulp(int inexact) {
    if (inexact == 0) return;
    if (mpfr_zero_p(mid_))
        throw std::runtime_error("Ball: inexact underflow to zero");
    ScratchReal ulp(kRadPrec);
    mpfr_set_ui_2exp(ulp.x, 1, mpfr_get_exp(mid_) - mpfr_get_prec(mid_), MPFR_RNDU);
    add_rad(rad_, ulp.x);
}

Ball Ball::from_long(long v, mpfr_prec_t prec_bits) {
    Ball r(prec_bits);
    int t = mpfr_set_si(r.mid_, v, MPFR_RNDN);
    r.bump_rad_ulp(t);
    return r;
}

Ball Ball::from_mpz(const mpz_class& v, mpfr_prec_t prec_bits) {
    Ball r(prec_bits);
    int t = mpfr_set_z(r.mid_, v.get_mpz_t(), MPFR_RNDN);
    r.bump_rad_ulp(t);
    return r;
}

Ball Ball::from_mpq(const mpq_class& v, mpfr_prec_t prec_bits) {
    Ball r(prec_bits);
    int t = mpfr_set_q(r.mid_, v.get_mpq_t(), MPFR_RNDN);
    r.bump_rad_ulp(t);
    return r;
}

Ball Ball::from_double(double v, mpfr_prec_t prec_bits) {
    Ball r(prec_bits);
    mpfr_set_d(r.mid_, v, MPFR_RNDN);
    return r;
}

Ball Ball::pi(mpfr_prec_t prec_bits) {
    Ball r(prec_bits);
    int t = mpfr_const_pi(r.mid_, MPFR_RNDN);
    r.bump_rad_ulp(t);
    return r;
}

Ball Ball::from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, mpfr_prec_t prec_bits) {
    if (mpfr_cmp(lo, hi) > 0)
        throw std::invalid_argument("Ball::from_endpoints: lo > hi");
    Ball r(prec_bits);
    ScratchReal t(prec_bits + 8);
    mpfr_add(t.x, lo, hi, MPFR_RNDN);
    mpfr_div_2ui(t.x, t.x, 1, MPFR_RNDN);
    int ix = mpfr_set(r.mid_, t.x, MPFR_RNDN);
    // radius: max distance from midpoint to either endpoint
    ScratchReal d1(kRadPrec), d2(kRadPrec);
    mpfr_sub(d1.x, hi, r.mid_, MPFR_RNDU);
    mpfr_sub(d2.x, r.mid_, lo, MPFR_RNDU);
    mpfr_max(r.rad_, d1.x, d2.x, MPFR_RNDU);
    r.bump_rad_ulp(ix);
    return r;
}

bool Ball::exact() const { return mpfr_zero_p(rad_); }

void Ball::lower(mpfr_ptr out) const { mpfr_sub(out, mid_, rad_, MPFR_RNDD); }
void Ball::upper(mpfr_ptr out) const { mpfr_add(out, mid_, rad_, MPFR_RNDU); }

double Ball::mid_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }
double Ball::rad_double() const { return mpfr_get_d(rad_, MPFR_RNDU); }

double Ball::lower_double() const {
    ScratchReal t(precision() + 8);
    lower(t.x);
    return mpfr_get_d(t.x, MPFR_RNDD);
}

double Ball::upper_double() const {
    ScratchReal t(precision() + 8);
    upper(t.x);
    return mpfr_get_d(t.x, MPFR_RNDU);
}

Ball Ball::upper_ball() const {
    Ball r(precision());
    upper(r.mid_);
    return r;
}

Ball Ball::lower_ball() const {
    Ball r(precision());
    lower(r.mid_);
    return r;
}

bool Ball::contains_zero() const {
    ScratchReal a(precision() + 8);
    mpfr_abs(a.x, mid_, MPFR_RNDD);
    return mpfr_cmp(a.x, rad_) <= 0;
}

bool Ball::contains(const Ball& other) const {
    ScratchReal tl(precision() + 8), ol(other.precision() + 8);
    lower(tl.x);
    other.lower(ol.x);
    if (mpfr_cmp(tl.x, ol.x) > 0) return false;
    upper(tl.x);
    other.upper(ol.x);
    return mpfr_cmp(ol.x, tl.x) <= 0;
}

mpz_class Ball::nearest_integer() const {
    ScratchReal t(precision());
    mpfr_rint(t.x, mid_, MPFR_RNDN);
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), t.x, MPFR_RNDN);
    return z;
}

std::string Ball::str(long significant_digits) const {
    if (significant_digits < 1) significant_digits = 1;
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", static_cast<int>(significant_digits), mid_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

Ball operator+(const Ball& a, const Ball& b) {
    Ball r(std::max(a.precision(), b.precision()));
    int t = mpfr_add(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
    r.bump_rad_ulp(t);
    return r;
}

Ball operator-(const Ball& a, const Ball& b) {
    Ball r(std::max(a.precision(), b.precision()));
    int t = mpfr_sub(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
    r.bump_rad_ulp(t);
    return r;
}

Ball operator-(const Ball& a) {
    Ball r(a);
    mpfr_neg(r.mid_, r.mid_, MPFR_RNDN);
    return r;
}

Ball operator*(const Ball& a, const Ball& b) {
    Ball r(std::max(a.precision(), b.precision()));
    int t = mpfr_mul(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    // |a| rb + |b| ra + ra rb, all upward
    ScratchReal am(kRadPrec), bm(kRadPrec), term(kRadPrec);
    mpfr_abs(am.x, a.mid_, MPFR_RNDU);
    mpfr_abs(bm.x, b.mid_, MPFR_RNDU);
    mpfr_mul(term.x, am.x, b.rad_, MPFR_RNDU);
    mpfr_set(r.rad_, term.x, MPFR_RNDU);
    mpfr_mul(term.x, bm.x, a.rad_, MPFR_RNDU);
    Ball::add_rad(r.rad_, term.x);
    mpfr_mul(term.x, a.rad_, b.rad_, MPFR_RNDU);
    Ball::add_rad(r.rad_, term.x);
    r.bump_rad_ulp(t);
    return r;
}

Ball operator/(const Ball& a, const Ball& b) {
    if (b.contains_zero())
        throw std::domain_error("Ball division: denominator interval contains zero");
    Ball r(std::max(a.precision(), b.precision()));
    int t = mpfr_div(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
    // error <= (ra + |a/b| rb) / (|b| - rb)
    ScratchReal bm(kRadPrec), den(kRadPrec), qm(kRadPrec), num(kRadPrec);
    mpfr_abs(bm.x, b.mid_, MPFR_RNDD);
    mpfr_sub(den.x, bm.x, b.rad_, MPFR_RNDD);
    mpfr_abs(qm.x, r.mid_, MPFR_RNDU);
    mpfr_mul(num.x, qm.x, b.rad_, MPFR_RNDU);
    mpfr_add(num.x, num.x, a.rad_, MPFR_RNDU);
    mpfr_div(num.x, num.x, den.x, MPFR_RNDU);
    mpfr_set(r.rad_, num.x, MPFR_RNDU);
    r.bump_rad_ulp(t);
    return r;
}

namespace {

/* Evaluates a monotone mpfr function on interval endpoints and recentres.
 * fn must round in the direction given by its rnd argument. */
template <typename Fn>
Ball monotone_increasing(const Ball& a, Fn&& fn) {
    mpfr_prec_t p = a.precision();
    ScratchReal lo(p + 8), hi(p + 8), flo(p), fhi(p);
    a.lower(lo.x);
    a.upper(hi.x);
    fn(flo.x, lo.x, MPFR_RNDD);
    fn(fhi.x, hi.x, MPFR_RNDU);
    return Ball::from_endpoints(flo.x, fhi.x, p);
}

}  // namespace

Ball sqrt(const Ball& a) {
    ScratchReal lo(a.precision() + 8);
    a.lower(lo.x);
    if (mpfr_sgn(lo.x) < 0)
        throw std::domain_error("Ball sqrt: interval extends below zero");
    return monotone_increasing(a, [](mpfr_ptr out, mpfr_srcptr in, mpfr_rnd_t rnd) {
        mpfr_sqrt(out, in, rnd);
    });
}

Ball exp(const Ball& a) {
    return monotone_increasing(a, [](mpfr_ptr out, mpfr_srcptr in, mpfr_rnd_t rnd) {
        mpfr_exp(out, in, rnd);
    });
}

Ball log(const Ball& a) {
    ScratchReal lo(a.precision() + 8);
    a.lower(lo.x);
    if (mpfr_sgn(lo.x) <= 0)
        throw std::domain_error("Ball log: interval not strictly positive");
    return monotone_increasing(a, [](mpfr_ptr out, mpfr_srcptr in, mpfr_rnd_t rnd) {
        mpfr_log(out, in, rnd);
    });
}

Ball abs(const Ball& a) {
    if (!a.contains_zero()) {
        Ball r(a);
        mpfr_abs(r.mid_, r.mid_, MPFR_RNDN);
        return r;
    }
    // interval straddles zero: [0, max(|lo|, |hi|)]
    mpfr_prec_t p = a.precision();
    ScratchReal lo(p + 8), hi(p + 8), zero(p + 8);
    a.lower(lo.x);
    a.upper(hi.x);
    mpfr_abs(lo.x, lo.x, MPFR_RNDU);
    mpfr_abs(hi.x, hi.x, MPFR_RNDU);
    mpfr_max(hi.x, lo.x, hi.x, MPFR_RNDU);
    mpfr_set_zero(zero.x, 1);
    return Ball::from_endpoints(zero.x, hi.x, p);
}

/* |cos'| and |sin'| are bounded by 1, so the input radius passes through
 * unchanged and only the midpoint rounding is added. The radius is clamped
 * at 2, which always covers [-1, 1]. */
Ball cos(const Ball& a) {
    Ball out(a.precision());
    int t = mpfr_cos(out.mid_, a.mid_, MPFR_RNDN);
    mpfr_set(out.rad_, a.rad_, MPFR_RNDU);
    out.bump_rad_ulp(t);
    if (mpfr_cmp_ui(out.rad_, 2) > 0) mpfr_set_ui(out.rad_, 2, MPFR_RNDU);
    return out;
}

Ball sin(const Ball& a) {
    Ball out(a.precision());
    int t = mpfr_sin(out.mid_, a.mid_, MPFR_RNDN);
    mpfr_set(out.rad_, a.rad_, MPFR_RNDU);
    out.bump_rad_ulp(t);
    if (mpfr_cmp_ui(out.rad_, 2) > 0) mpfr_set_ui(out.rad_, 2, MPFR_RNDU);
    return out;
}

Ball pow_q(const Ball& base, const mpq_class& exponent) {
    if (exponent == 0) return Ball::from_long(1, base.precision());
    Ball e = Ball::from_mpq(exponent, base.precision());
    return exp(e * log(base));
}

namespace {

mpq_class reduce_mod_2(const mpq_class& x) {
    // x - 2*floor(x/2), result in [0, 2)
    mpq_class half = x / 2;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), half.get_num_mpz_t(), half.get_den_mpz_t());
    return x - 2 * mpq_class(fl);
}

}  // namespace

Ball cos_pi(const mpq_class& x, mpfr_prec_t prec_bits) {
    mpq_class r = reduce_mod_2(x);
    return cos(Ball::pi(prec_bits) * Ball::from_mpq(r, prec_bits));
}

Ball sin_pi(const mpq_class& x, mpfr_prec_t prec_bits) {
    mpq_class r = reduce_mod_2(x);
    return sin(Ball::pi(prec_bits) * Ball::from_mpq(r, prec_bits));
}

Cert certified_le(const Ball& a, const Ball& b) {
    mpfr_prec_t p = std::max(a.precision(), b.precision()) + 8;
    ScratchReal x(p), y(p);
    a.upper(x.x);
    b.lower(y.x);
    if (mpfr_cmp(x.x, y.x) <= 0) return Cert::Yes;
    a.lower(x.x);
    b.upper(y.x);
    if (mpfr_cmp(x.x, y.x) > 0) return Cert::No;
    return Cert::Unknown;
}

Cert certified_lt(const Ball& a, const Ball& b) {
    mpfr_prec_t p = std::max(a.precision(), b.precision()) + 8;
    ScratchReal x(p), y(p);
    a.upper(x.x);
    b.lower(y.x);
    if (mpfr_cmp(x.x, y.x) < 0) return Cert::Yes;
    a.lower(x.x);
    b.upper(y.x);
    if (mpfr_cmp(x.x, y.x) >= 0) return Cert::No;
    return Cert::Unknown;
}

BallComplex BallComplex::from_real(const Ball& r) {
    return BallComplex(r, Ball(r.precision()));
}

BallComplex BallComplex::unit_phase(const mpq_class& x, mpfr_prec_t prec_bits) {
    return BallComplex(cos_pi(x, prec_bits), sin_pi(x, prec_bits));
}

BallComplex operator+(const BallComplex& a, const BallComplex& b) {
    return BallComplex(a.re + b.re, a.im + b.im);
}

BallComplex operator-(const BallComplex& a, const BallComplex& b) {
    return BallComplex(a.re - b.re, a.im - b.im);
}

BallComplex operator*(const BallComplex& a, const BallComplex& b) {
    return BallComplex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

BallComplex operator*(const BallComplex& a, const Ball& b) {
    return BallComplex(a.re * b, a.im * b);
}

BallComplex operator/(const BallComplex& a, const Ball& b) {
    return BallComplex(a.re / b, a.im / b);
}

BallComplex operator/(const BallComplex& a, const BallComplex& b) {
    Ball d = norm(b);
    return BallComplex((a.re * b.re + a.im * b.im) / d,
                       (a.im * b.re - a.re * b.im) / d);
}

Ball norm(const BallComplex& z) { return z.re * z.re + z.im * z.im; }

Ball abs(const BallComplex& z) {
    Ball n = norm(z);
    // the square sum is nonnegative; clip radius slack below zero before
    // taking the root
    ScratchReal lo(n.precision() + 8), hi(n.precision() + 8);
    n.lower(lo.x);
    n.upper(hi.x);
    if (mpfr_sgn(lo.x) < 0) mpfr_set_zero(lo.x, 1);
    mpfr_sqrt(lo.x, lo.x, MPFR_RNDD);
    mpfr_sqrt(hi.x, hi.x, MPFR_RNDU);
    return Ball::from_endpoints(lo.x, hi.x, n.precision());
}

BallComplex exp(const BallComplex& z) {
    Ball m = exp(z.re);
    return BallComplex(m * cos(z.im), m * sin(z.im));
}

Ball arg(const BallComplex& z) {
    Ball r = abs(z);
    mpfr_prec_t p = std::max(z.re.precision(), z.im.precision());
    ScratchReal rlo(p + 8);
    r.lower(rlo.x);
    if (mpfr_sgn(rlo.x) <= 0)
        throw std::domain_error("arg: modulus interval touches zero");
    Ball out(p);
    int t = mpfr_atan2(out.mid_, z.im.mid(), z.re.mid(), MPFR_RNDN);
    // |grad arg| = 1/r, and sqrt(dx^2+dy^2) <= dx+dy
    ScratchReal extra(32);
    mpfr_add(extra.x, z.re.rad(), z.im.rad(), MPFR_RNDU);
    mpfr_div(extra.x, extra.x, rlo.x, MPFR_RNDU);
    mpfr_set(out.rad_, extra.x, MPFR_RNDU);
    out.bump_rad_ulp(t);
    return out;
}

BallComplex sqrt_principal(const BallComplex& z) {
    // Re w = sqrt((|z| + Re z)/2), Im w = Im z / (2 Re w); valid off the
    // branch cut, certified here by requiring |z| + Re z > 0.
    Ball r = abs(z);
    Ball two = Ball::from_long(2, z.re.precision());
    Ball s = (r + z.re) / two;
    ScratchReal lo(s.precision() + 8);
    s.lower(lo.x);
    if (mpfr_sgn(lo.x) <= 0)
        throw std::domain_error("sqrt_principal: interval touches the branch cut");
    Ball u = sqrt(s);
    return BallComplex(u, z.im / (two * u));
}

}  // namespace overcubic

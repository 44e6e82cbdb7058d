#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace overcubic {

// Three-valued answer for interval comparisons. Unknown means the intervals
// overlap and the caller should retry at higher precision.
enum class Cert { Yes, No, Unknown };

long digits_to_bits(long digits);

struct BallComplex;

/* A real number stored as midpoint +/- radius. The midpoint carries the
 * working precision; the radius is a low-precision upper bound on the total
 * error (input radii plus every rounding performed along the way, always
 * rounded upward). Any true value fed in stays inside the interval through
 * arbitrary chains of the operations below. */
class Ball {
public:
    Ball();
    explicit Ball(mpfr_prec_t prec_bits);
    Ball(const Ball& other);
    Ball(Ball&& other) noexcept;
    Ball& operator=(const Ball& other);
    Ball& operator=(Ball&& other) noexcept;
    ~Ball();

    static Ball from_long(long v, mpfr_prec_t prec_bits);
    static Ball from_mpz(const mpz_class& v, mpfr_prec_t prec_bits);
    static Ball from_mpq(const mpq_class& v, mpfr_prec_t prec_bits);
    static Ball from_double(double v, mpfr_prec_t prec_bits);
    static Ball pi(mpfr_prec_t prec_bits);
    // Interval [lo, hi] given as two mpfr endpoints.
    static Ball from_endpoints(mpfr_srcptr lo, mpfr_srcptr hi, mpfr_prec_t prec_bits);

    mpfr_prec_t precision() const;
    mpfr_srcptr mid() const { return mid_; }
    mpfr_srcptr rad() const { return rad_; }

    bool exact() const;
    bool contains_zero() const;
    // true iff [other.lo, other.hi] is inside [this.lo, this.hi]
    bool contains(const Ball& other) const;

    void lower(mpfr_ptr out) const;  // rounded down
    void upper(mpfr_ptr out) const;  // rounded up
    double mid_double() const;
    double rad_double() const;
    double lower_double() const;
    double upper_double() const;
    // Exact-endpoint balls (radius zero) for bound bookkeeping.
    Ball upper_ball() const;
    Ball lower_ball() const;

    mpz_class nearest_integer() const;  // nearest integer to the midpoint

    // Decimal rendering of the midpoint with a fixed significant-digit count
    // (deterministic; used for machine output).
    std::string str(long significant_digits) const;

    friend Ball operator+(const Ball& a, const Ball& b);
    friend Ball operator-(const Ball& a, const Ball& b);
    friend Ball operator*(const Ball& a, const Ball& b);
    friend Ball operator/(const Ball& a, const Ball& b);
    friend Ball operator-(const Ball& a);

    friend Ball sqrt(const Ball& a);
    friend Ball exp(const Ball& a);
    friend Ball log(const Ball& a);
    friend Ball abs(const Ball& a);
    friend Ball cos(const Ball& a);
    friend Ball sin(const Ball& a);
    friend Ball arg(const BallComplex& z);

private:
    mpfr_t mid_;
    mpfr_t rad_;

    void bump_rad_ulp(int inexact);
    static void add_rad(mpfr_ptr rad, mpfr_srcptr extra);
};

Ball sqrt(const Ball& a);
Ball exp(const Ball& a);
Ball log(const Ball& a);
Ball abs(const Ball& a);
Ball cos(const Ball& a);
Ball sin(const Ball& a);

// base^(p/q) for certified-positive base
Ball pow_q(const Ball& base, const mpq_class& exponent);

// cos(pi x), sin(pi x) for exact rational x (reduced mod 2 internally, so the
// phase never loses accuracy to argument reduction)
Ball cos_pi(const mpq_class& x, mpfr_prec_t prec_bits);
Ball sin_pi(const mpq_class& x, mpfr_prec_t prec_bits);

// a <= b / a < b as certified interval statements
Cert certified_le(const Ball& a, const Ball& b);
Cert certified_lt(const Ball& a, const Ball& b);

/* Complex value with ball real and imaginary parts. */
struct BallComplex {
    Ball re, im;

    BallComplex() = default;
    BallComplex(Ball r, Ball i) : re(std::move(r)), im(std::move(i)) {}
    static BallComplex from_real(const Ball& r);
    // e^{i pi x} for exact rational x
    static BallComplex unit_phase(const mpq_class& x, mpfr_prec_t prec_bits);

    friend BallComplex operator+(const BallComplex& a, const BallComplex& b);
    friend BallComplex operator-(const BallComplex& a, const BallComplex& b);
    friend BallComplex operator*(const BallComplex& a, const BallComplex& b);
    friend BallComplex operator/(const BallComplex& a, const BallComplex& b);
    friend BallComplex operator*(const BallComplex& a, const Ball& b);
    friend BallComplex operator/(const BallComplex& a, const Ball& b);
};

Ball abs(const BallComplex& z);
Ball norm(const BallComplex& z);              // re^2 + im^2
// A continuous lift of the argument (phase angle); requires |z| certified
// away from zero. The radius bounds the angle deviation of every point of
// the box from the midpoint angle as a real number.
Ball arg(const BallComplex& z);
BallComplex exp(const BallComplex& z);
BallComplex sqrt_principal(const BallComplex& z);  // requires Re(z) > 0 certified

}  // namespace overcubic

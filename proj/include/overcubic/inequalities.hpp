#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "overcubic/ball.hpp"
#include "overcubic/qseries.hpp"

namespace overcubic {

/* J^{d,n}(X) = sum_i C(d,i) a(n+i) X^i with exact integer coefficients. */
struct JensenPolynomial {
    long degree = 0;
    long shift = 0;
    std::vector<mpz_class> coefficients;  // index = power of X
};

JensenPolynomial jensen(long d, long n, const PowerSeries& table);

// Exact decision: only real roots (multiplicities allowed)? Squarefree part
// via gcd with the derivative, then a Sturm real-root count over exact
// integers.
bool is_hyperbolic(const std::vector<mpz_class>& poly);

// All n in [n_lo, n_hi] where a(n)^2 > a(n+1) a(n-1) fails (exact integers).
std::vector<long> log_concavity_failures(long n_lo, long n_hi,
                                         const PowerSeries& table);

/* Certified comparison of a(n+1)a(n-1)/a(n)^2 against the two displayed
 * cubic bounds in 1/v, v = pi sqrt(3n/2). */
struct RatioBoundReport {
    long n = 0;
    Ball v;
    Ball upsilon1;
    Ball ratio;
    Ball upsilon2;
    Cert holds = Cert::Unknown;
};

RatioBoundReport ratio_bounds(long n, const PowerSeries& table, long digits);

/* Scan of J^{d,n-1} hyperbolicity over n = 1..horizon. candidate_N is the
 * first n after the last observed failure; it is a candidate only, verified
 * up to the horizon. */
struct ThresholdScan {
    long d = 0;
    long last_failure = 0;  // 0 when no failures at all
    long candidate_N = 1;
    long verified_to = 0;
    std::vector<long> failures;
};

ThresholdScan turan_threshold(long d, long horizon, const PowerSeries& table);

// Hermite polynomial H_d of the e^{-t^2 + Xt} generating function
// (H_2 = X^2 - 2, H_3 = X^3 - 6X, ...).
std::vector<mpz_class> hermite_polynomial(long d);

// Max absolute coefficient deviation of the renormalized Jensen polynomial
// delta^{-d}/a(n) * J^{d,n}((delta X - 1)/e^{A}) from H_d, with
// A = (pi/2) sqrt(3/(2n)) - 5/(4n) and delta = sqrt((pi/8) sqrt(3/(2n^3)) - 5/(8n^2)).
Ball hermite_limit_check(long d, long n, long digits, const PowerSeries& table);

struct SubadditivityScan {
    std::vector<std::pair<long, long>> violations;  // a(n)a(m) < a(n+m)
    std::vector<std::pair<long, long>> equalities;  // a(n)a(m) = a(n+m)
};

// Exact check of a(n)a(m) >= a(n+m) over unordered pairs with n+m <= max_sum.
SubadditivityScan subadditivity_scan(long max_sum, const PowerSeries& table);

// The ratio B > 1 where the subadditivity margin for fixed m degenerates:
// root of L(B) = log(m^{5/4} 2^{19/4} / 3^{3/4}) + log(H(B)) with
//   L(B) = pi sqrt(3/2) (sqrt m + sqrt(Bm) - sqrt(m + Bm)),
//   H(B) = (B/(B+1))^{5/4} (1 + 1/sqrt(m+Bm))
//          / ((1 - 8/(5 sqrt m))(1 - 8/(5 sqrt(Bm)))).
// Isolated by bisection over (1, 10^4); m in 3..7.
Ball subadditivity_crossover(long m, long digits);

// Exact check of a(n)^2 > a(n-m) a(n+m) over 1 < m < n <= n_max.
std::vector<std::pair<long, long>> general_log_concavity_scan(
    long n_max, const PowerSeries& table);

}  // namespace overcubic

#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "overcubic/ball.hpp"

namespace overcubic {

struct SeriesTerm {
    long k;
    Ball contribution;
};

/* Per-k contributions of the two Bessel series, the accumulated partial sum,
 * a rigorous bound on everything omitted, and the recovered integer when the
 * rounding criterion (tail + radius < 1/4) holds. */
struct RademacherBreakdown {
    long n = 0;
    std::vector<SeriesTerm> terms_odd;   // k = 1, 3, 5, ...
    std::vector<SeriesTerm> terms_even;  // k = 2, 6, 10, ...
    Ball partial_sum;
    Ball tail_bound;
    std::optional<mpz_class> recovered;
};

// Leading term (3 pi / (16 n sqrt 2)) I_2(pi sqrt(3n/2)).
Ball main_term(long n, long digits);

// First terms_per_series terms of each series plus the tail bound.
RademacherBreakdown evaluate(long n, long terms_per_series, long digits);

// Doubles terms and precision until the rounding criterion holds, then
// returns the recovered integer. Throws if the configured ceiling is hit
// (which would indicate an implementation bug, not a math failure).
mpz_class exact_value(long n);

// Leading asymptotic form 3^{3/4} / (2^{19/4} n^{5/4}) e^{pi sqrt(3n/2)}.
Ball asymptotic_main(long n, long digits);

// Explicit envelope for the remainder after the main term:
// 2^{-7/4} (2*5^{5/2}/(pi n^{7/4}) + n^{-5/4}) e^{pi sqrt(n/2)}.
Ball error_envelope(long n, long digits);

// Working-precision default: 30 digits on top of the main term's magnitude.
long default_digits(long n);

}  // namespace overcubic

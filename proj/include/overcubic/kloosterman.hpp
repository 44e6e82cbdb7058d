#pragma once

#include <gmpxx.h>

#include <vector>

#include "overcubic/ball.hpp"

namespace overcubic {

/* A finite sum of unit phases sum_h e^{i pi theta_h} over residues h coprime
 * to k. The phases are exact rationals (Dedekind-sum combinations minus
 * 2nh/k, reduced mod 2); only the final exponentials are floating, so the
 * value's radius is pure rounding. */
struct PhaseSum {
    long k = 0;
    long n = 0;
    std::vector<mpq_class> phases;  // ascending h over residues coprime to k
    BallComplex value;
};

// A_k for the odd-k series: theta_h = 2s(h,k) + s(2h,k) - s(4h,k) - 2nh/k.
// Requires k odd >= 1.
PhaseSum kloosterman_A1(long k, long n, long digits);

// A_k for the k = 2 (mod 4) series:
// theta_h = 2s(h,k) + s(h,k/2) - s(2h,k/2) - 2nh/k. Requires k = 2 (mod 4).
PhaseSum kloosterman_A2(long k, long n, long digits);

}  // namespace overcubic

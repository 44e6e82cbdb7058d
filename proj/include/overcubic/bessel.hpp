#pragma once

#include <gmpxx.h>

#include "overcubic/ball.hpp"

namespace overcubic {

// Modified Bessel function I_nu(x) for nu in {1,2}, x >= 0, by the ascending
// series sum (x/2)^{2m+nu} / (m! (m+nu)!); the geometric remainder after the
// last term taken is folded into the radius.
Ball bessel_I(int order, const Ball& x, long digits);

// E(s) = 1 - 15/(8s) + 105/(128 s^2) + 315/(1024 s^3) + 10395/(32768 s^4)
//        + 135135/(262144 s^5), the degree-5 asymptotic envelope of
//        sqrt(2 pi s) e^{-s} I_2(s). Exact in, exact out.
mpq_class i2_envelope(const mpq_class& s);
Ball i2_envelope(const Ball& s);

/* Which of the I_2 bound families hold at s. Each check is a certified
 * interval statement: Unknown means the enclosures overlapped and a retry
 * at higher precision is needed.
 *   sandwich (s >= 25):  (e^s/sqrt(2 pi s)) (E(s) -+ 31/s^6) brackets I_2(s)
 *   lower30 (s >= 30):   I_2(s) >= (e^s/sqrt(2 pi s)) / (1 + 2/s)
 *   envelope10 (s >= 10): (1 - 2/s) < sqrt(2 pi s) e^{-s} I_2(s)
 *                                   < 1 - 15/(8s) + 2/s^2                  */
struct BesselBoundsReport {
    bool sandwich_applicable = false;
    Cert sandwich_lower = Cert::Unknown;
    Cert sandwich_upper = Cert::Unknown;
    bool lower30_applicable = false;
    Cert lower30 = Cert::Unknown;
    Cert envelope_lower = Cert::Unknown;
    Cert envelope_upper = Cert::Unknown;

    bool all_applicable_hold() const;
};

BesselBoundsReport check_i2_bounds(const mpq_class& s, long digits);

// (2 N^2 / s) I_1(s/N): an upper bound for sum_{j>N} I_2(s/j).
Ball tail_majorant(const Ball& s, long N, long digits);

}  // namespace overcubic

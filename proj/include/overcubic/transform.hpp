#pragma once

#include <gmpxx.h>

#include "overcubic/ball.hpp"

namespace overcubic {

/* Which modular identity to verify. F* cases transform the partition
 * generating function f at q, q^2, q^4; A* cases transform the full
 * quotient f(q)^2 f(q^2) / f(q^4). The congruence class of k selects the
 * admissible case. */
enum class TransformTarget {
    F,          // any k
    F2Odd,      // k odd
    F2Even,     // k even
    F4Odd,      // k odd
    F4TwoMod4,  // k = 2 (mod 4)
    F4ZeroMod4, // k = 0 (mod 4)
    AOdd,       // k odd
    ATwoMod4,   // k = 2 (mod 4)
    AZeroMod4,  // k = 0 (mod 4)
};

struct TransformCase {
    TransformTarget target;
    long h = 0;
    long k = 1;
    BallComplex z;  // Re(z) > 0
    long digits = 40;
};

// 1/(q;q)_inf by truncated product, the omitted factors' log-tail folded
// into the radius. Rejects |q| > 0.999.
BallComplex eval_f(const BallComplex& q, long digits);

// |left - right| of the case's identity as an interval; a correct
// implementation yields an interval containing zero.
Ball verify_transformation(const TransformCase& c);

// Same with the Dedekind phase offset by 1/(6k); used as a sentinel that
// the checks are not vacuous.
Ball verify_transformation_corrupted(const TransformCase& c);

}  // namespace overcubic

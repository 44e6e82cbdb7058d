#pragma once

#include <gmpxx.h>

#include <stdexcept>

namespace overcubic {

// Raised by the fast Dedekind-sum path and by inverse_mod when the
// arguments share a factor. Kept distinct so callers can tell a misuse
// apart from an ordinary domain error.
struct not_coprime_error : std::domain_error {
    using std::domain_error::domain_error;
};

// s(h,k) by the defining sum: sum_{r=1}^{k-1} (r/k)(hr/k - floor(hr/k) - 1/2).
// O(k); h is reduced mod k first. Exact rational result.
mpq_class dedekind_sum_direct(long h, long k);

// Same value via the Euclidean reciprocity descent, O(log k).
// Requires gcd(h,k) = 1.
mpq_class dedekind_sum(long h, long k);

// x in [0,k) with a*x == target (mod k), target in {-1,+1}.
// Requires gcd(a,k) = 1.
long inverse_mod(long a, long k, int target);

}  // namespace overcubic

#include "overcubic/dedekind.hpp"

#include <numeric>

namespace overcubic {

namespace {

long mod_reduce(long h, long k) {
    long r = h % k;
    return r < 0 ? r + k : r;
}

mpq_class make_q(const mpz_class& num, const mpz_class& den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

mpq_class dedekind_sum_direct(long h, long k) {
    if (k < 1) throw std::domain_error("dedekind_sum_direct: k must be >= 1");
    h = mod_reduce(h, k);
    // sum_{r} r*(hr mod k) / k^2 - (k-1)/4
    const auto uk = static_cast<unsigned long>(k);
    const auto uh = static_cast<unsigned long>(h);
    unsigned __int128 acc = 0;
    unsigned long hr = 0;
    for (unsigned long r = 1; r < uk; ++r) {
        hr += uh;
        if (hr >= uk) hr -= uk;
        acc += static_cast<unsigned __int128>(r) * hr;
    }
    mpz_class num(static_cast<unsigned long>(acc >> 64));
    num <<= 64;
    num += static_cast<unsigned long>(acc);
    mpq_class s = make_q(num, mpz_class(k) * k) - make_q(k - 1, 4);
    return s;
}

mpq_class dedekind_sum(long h, long k) {
    if (k < 1) throw std::domain_error("dedekind_sum: k must be >= 1");
    h = mod_reduce(h, k);
    if (std::gcd(h, k) != 1)
        throw not_coprime_error("dedekind_sum: gcd(h,k) != 1");
    // Reciprocity descent: s(h,k) = -1/4 + (h^2 + k^2 + 1)/(12hk) - s(k mod h, h).
    mpq_class total = 0;
    int sign = 1;
    while (h > 0) {
        if (h == 1) {
            // s(1,k) = (k-1)(k-2)/(12k)
            total += sign * make_q(mpz_class(k - 1) * (k - 2), 12 * mpz_class(k));
            break;
        }
        mpz_class hh(h), kk(k);
        mpq_class recip = make_q(hh * hh + kk * kk + 1, 12 * hh * kk) - make_q(1, 4);
        total += sign * recip;
        long next = k % h;
        k = h;
        h = next;
        sign = -sign;
    }
    return total;
}

long inverse_mod(long a, long k, int target) {
    if (k < 1) throw std::domain_error("inverse_mod: k must be >= 1");
    if (target != 1 && target != -1)
        throw std::domain_error("inverse_mod: target must be +1 or -1");
    if (k == 1) return 0;
    a = mod_reduce(a, k);
    if (std::gcd(a, k) != 1)
        throw not_coprime_error("inverse_mod: gcd(a,k) != 1");
    // extended Euclid for a^{-1} mod k
    long t = 0, new_t = 1;
    long r = k, new_r = a;
    while (new_r != 0) {
        long q = r / new_r;
        long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    long inv = mod_reduce(t, k);
    return target == 1 ? inv : mod_reduce(-inv, k);
}

}  // namespace overcubic

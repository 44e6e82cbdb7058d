#include "overcubic/kloosterman.hpp"

#include <numeric>
#include <stdexcept>

#include "overcubic/dedekind.hpp"

namespace overcubic {

namespace {

mpq_class reduce_mod_2(const mpq_class& x) {
    mpq_class half = x / 2;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), half.get_num_mpz_t(), half.get_den_mpz_t());
    mpq_class r = x - 2 * mpq_class(fl);
    r.canonicalize();
    return r;
}

mpq_class make_q(long num, long den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

PhaseSum sum_phases(long k, long n, std::vector<mpq_class> phases, long digits) {
    long prec = digits_to_bits(digits);
    BallComplex total{Ball(prec), Ball(prec)};
    for (const mpq_class& theta : phases)
        total = total + BallComplex::unit_phase(theta, prec);
    PhaseSum out;
    out.k = k;
    out.n = n;
    out.phases = std::move(phases);
    out.value = total;
    return out;
}

}  // namespace

PhaseSum kloosterman_A1(long k, long n, long digits) {
    if (k < 1 || k % 2 == 0)
        throw std::domain_error("kloosterman_A1: k must be odd and positive");
    if (n < 0) throw std::domain_error("kloosterman_A1: n must be >= 0");
    std::vector<mpq_class> phases;
    for (long h = 0; h < k; ++h) {
        if (std::gcd(h, k) != 1) continue;
        mpq_class theta = 2 * dedekind_sum(h, k) + dedekind_sum((2 * h) % k, k) -
                          dedekind_sum((4 * h) % k, k) - make_q(2 * n * h, k);
        phases.push_back(reduce_mod_2(theta));
    }
    return sum_phases(k, n, std::move(phases), digits);
}

PhaseSum kloosterman_A2(long k, long n, long digits) {
    if (k < 2 || k % 4 != 2)
        throw std::domain_error("kloosterman_A2: k must be = 2 (mod 4)");
    if (n < 0) throw std::domain_error("kloosterman_A2: n must be >= 0");
    long half = k / 2;
    std::vector<mpq_class> phases;
    for (long h = 0; h < k; ++h) {
        if (std::gcd(h, k) != 1) continue;
        mpq_class theta = 2 * dedekind_sum(h, k) + dedekind_sum(h % half, half) -
                          dedekind_sum((2 * h) % half, half) - make_q(2 * n * h, k);
        phases.push_back(reduce_mod_2(theta));
    }
    return sum_phases(k, n, std::move(phases), digits);
}

}  // namespace overcubic

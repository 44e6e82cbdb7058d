#include "overcubic/rademacher.hpp"

#include <cmath>
#include <stdexcept>

#include "overcubic/bessel.hpp"
#include "overcubic/kloosterman.hpp"

namespace overcubic {

namespace {

// pi * sqrt(3n/2)
Ball odd_series_argument(long n, long prec) {
    return Ball::pi(prec) * sqrt(Ball::from_mpq(mpq_class(3 * n, 2), prec));
}

// pi * sqrt(2n)
Ball even_series_argument(long n, long prec) {
    return Ball::pi(prec) * sqrt(Ball::from_long(2 * n, prec));
}

// 3 pi / (16 n sqrt 2)
Ball odd_prefactor(long n, long prec) {
    return Ball::from_long(3, prec) * Ball::pi(prec) /
           (Ball::from_long(16 * n, prec) * sqrt(Ball::from_long(2, prec)));
}

// pi / (4 n sqrt 2)
Ball even_prefactor(long n, long prec) {
    return Ball::pi(prec) /
           (Ball::from_long(4 * n, prec) * sqrt(Ball::from_long(2, prec)));
}

/* Upper bound for sum_{j >= first_j} I_2(s / (a j + b)) with a j + b the
 * series' index pattern (odd k: a=2, b=1; even k: a=4, b=2), using
 * |A_k/k| <= 1 term bounds. A block of leading terms is summed explicitly;
 * the rest is closed off by the better of two majorants on
 * sum_{j >= J} I_2((s/a)/j):
 *   - the Bessel tail bound (2 N^2 / (s/a)) I_1((s/a)/N) with N <= J-1,
 *   - the quadratic envelope (s/a)^2/8 * e^{(s/a)^2/(4J^2)} / (J-1),
 * both valid since I_2(s/(aj+b)) <= I_2((s/a)/j). The explicit block grows
 * until the closure's weighted size falls under tail_eps (or a cap).      */
Ball series_tail_bound(const Ball& s, long a, long b, long first_j,
                       const Ball& prefactor, long digits) {
    long prec = digits_to_bits(digits);
    Ball sa = s / Ball::from_long(a, prec);

    auto closure = [&](long J) -> Ball {
        // Bessel tail-lemma route, N chosen near the optimum s/(2.2 a)
        Ball best(prec);
        bool have = false;
        double nstar = sa.upper_double() / 2.2;
        std::vector<long> candidates{J - 1};
        long c = static_cast<long>(nstar);
        for (long d = -1; d <= 2; ++d)
            if (c + d >= 1 && c + d <= J - 1) candidates.push_back(c + d);
        for (long N : candidates) {
            if (N < 1) continue;
            Ball v = tail_majorant(sa, N, digits).upper_ball();
            if (!have || v.upper_double() < best.upper_double()) {
                best = v;
                have = true;
            }
        }
        {
            // quadratic envelope: I_2(x) <= (x^2/8) e^{x^2/4};
            // sum_{j>=J} 1/j^2 <= 1/(J-1) for J >= 2, and < 2 for J = 1
            Ball x = sa / Ball::from_long(J, prec);
            Ball zeta_tail = (J >= 2)
                                 ? Ball::from_long(1, prec) / Ball::from_long(J - 1, prec)
                                 : Ball::from_long(2, prec);
            Ball q = sa * sa / Ball::from_long(8, prec) *
                     exp(x * x / Ball::from_long(4, prec)) * zeta_tail;
            q = q.upper_ball();
            if (!have || q.upper_double() < best.upper_double()) best = q;
        }
        return best;
    };

    const double tail_eps = 1.0 / 64.0;
    long block = 0;
    while (block < (1L << 16)) {
        Ball c = prefactor * closure(first_j + block);
        if (c.upper_double() <= tail_eps) break;
        block = block == 0 ? 8 : block * 2;
    }

    Ball total(prec);
    for (long j = first_j; j < first_j + block; ++j) {
        Ball x = s / Ball::from_long(a * j + b, prec);
        total = total + bessel_I(2, x, digits).upper_ball();
    }
    total = total + closure(first_j + block);
    return total.upper_ball();
}

}  // namespace

long default_digits(long n) {
    double magnitude = M_PI * std::sqrt(1.5 * static_cast<double>(n)) / std::log(10.0);
    return 30 + static_cast<long>(magnitude) + 1;
}

Ball main_term(long n, long digits) {
    if (n < 1) throw std::domain_error("main_term: n must be >= 1");
    long prec = digits_to_bits(digits);
    return odd_prefactor(n, prec) * bessel_I(2, odd_series_argument(n, prec), digits);
}

RademacherBreakdown evaluate(long n, long terms_per_series, long digits) {
    if (n < 1) throw std::domain_error("evaluate: n must be >= 1");
    if (terms_per_series < 1)
        throw std::domain_error("evaluate: terms_per_series must be >= 1");
    long prec = digits_to_bits(digits);

    RademacherBreakdown out;
    out.n = n;
    Ball s_odd = odd_series_argument(n, prec);
    Ball s_even = even_series_argument(n, prec);
    Ball pref_odd = odd_prefactor(n, prec);
    Ball pref_even = even_prefactor(n, prec);

    Ball sum(prec);
    for (long j = 0; j < terms_per_series; ++j) {
        long k = 2 * j + 1;
        Ball a = kloosterman_A1(k, n, digits).value.re;
        Ball term = pref_odd * a / Ball::from_long(k, prec) *
                    bessel_I(2, s_odd / Ball::from_long(k, prec), digits);
        sum = sum + term;
        out.terms_odd.push_back({k, term});
    }
    for (long j = 0; j < terms_per_series; ++j) {
        long k = 4 * j + 2;
        Ball a = kloosterman_A2(k, n, digits).value.re;
        Ball term = pref_even * a / Ball::from_long(k, prec) *
                    bessel_I(2, s_even / Ball::from_long(k, prec), digits);
        sum = sum + term;
        out.terms_even.push_back({k, term});
    }
    out.partial_sum = sum;

    Ball tail = pref_odd * series_tail_bound(s_odd, 2, 1, terms_per_series, pref_odd, digits) +
                pref_even * series_tail_bound(s_even, 4, 2, terms_per_series, pref_even, digits);
    out.tail_bound = tail.upper_ball();

    // rounding criterion: omitted mass plus accumulated radius under 1/4
    // (threshold shaded a hair below to absorb the double rounding here)
    double slack = out.tail_bound.upper_double() + out.partial_sum.rad_double();
    if (slack < 0.2499) out.recovered = out.partial_sum.nearest_integer();
    return out;
}

mpz_class exact_value(long n) {
    if (n < 1) throw std::domain_error("exact_value: n must be >= 1");
    long terms = 8;
    long digits = default_digits(n);
    for (int attempt = 0; attempt < 8; ++attempt) {
        RademacherBreakdown b = evaluate(n, terms, digits);
        if (b.recovered) return *b.recovered;
        terms *= 2;
        digits += digits / 2;
    }
    throw std::runtime_error("exact_value: rounding criterion unreachable (bug)");
}

Ball asymptotic_main(long n, long digits) {
    if (n < 1) throw std::domain_error("asymptotic_main: n must be >= 1");
    long prec = digits_to_bits(digits);
    Ball three = Ball::from_long(3, prec);
    Ball two = Ball::from_long(2, prec);
    Ball nb = Ball::from_long(n, prec);
    Ball coeff = pow_q(three, mpq_class(3, 4)) /
                 (pow_q(two, mpq_class(19, 4)) * pow_q(nb, mpq_class(5, 4)));
    return coeff * exp(odd_series_argument(n, prec));
}

Ball error_envelope(long n, long digits) {
    if (n < 1) throw std::domain_error("error_envelope: n must be >= 1");
    long prec = digits_to_bits(digits);
    Ball two = Ball::from_long(2, prec);
    Ball five = Ball::from_long(5, prec);
    Ball nb = Ball::from_long(n, prec);
    Ball poly = two * pow_q(five, mpq_class(5, 2)) /
                    (Ball::pi(prec) * pow_q(nb, mpq_class(7, 4))) +
                Ball::from_long(1, prec) / pow_q(nb, mpq_class(5, 4));
    Ball expo = exp(Ball::pi(prec) * sqrt(nb / two));
    return pow_q(two, mpq_class(-7, 4)) * poly * expo;
}

}  // namespace overcubic

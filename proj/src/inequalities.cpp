#include "overcubic/inequalities.hpp"

#include <algorithm>
#include <stdexcept>

namespace overcubic {

namespace {

using Poly = std::vector<mpz_class>;  // index = degree

void strip(Poly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

mpz_class content(const Poly& p) {
    mpz_class c = 0;
    for (const mpz_class& x : p) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
    return sgn(c) == 0 ? mpz_class(1) : c;
}

void make_primitive(Poly& p) {
    mpz_class c = content(p);
    if (c == 1) return;
    for (mpz_class& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

Poly derivative(const Poly& p) {
    Poly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(static_cast<long>(i) * p[i]);
    return d;
}

/* Pseudo-remainder of f by g. Each reduction step multiplies the running
 * remainder by lc(g); parity_negative reports whether the accumulated
 * multiplier ended up negative, so callers can restore the sign of the
 * rational remainder. */
Poly pseudo_remainder(Poly f, const Poly& g, bool& parity_negative) {
    const mpz_class& lc = g.back();
    const size_t dg = g.size() - 1;
    bool neg = false;
    strip(f);
    while (f.size() >= g.size() && !f.empty()) {
        if (sgn(f.back()) == 0) {
            f.pop_back();
            continue;
        }
        mpz_class flc = f.back();
        size_t shift = f.size() - g.size();
        for (mpz_class& x : f) x *= lc;
        for (size_t i = 0; i < g.size(); ++i)
            f[i + shift] -= flc * g[i];
        if (sgn(lc) < 0) neg = !neg;
        strip(f);
        if (f.size() <= dg) break;
    }
    parity_negative = neg;
    return f;
}

// gcd up to sign via the primitive PRS
Poly gcd_prs(Poly a, Poly b) {
    strip(a);
    strip(b);
    make_primitive(a);
    make_primitive(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        bool neg = false;
        Poly r = pseudo_remainder(a, b, neg);
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// exact division, valid when q | p in Q[x] with both primitive
Poly exact_divide(const Poly& p, const Poly& q) {
    Poly rem = p;
    Poly quot(p.size() - q.size() + 1);
    strip(rem);
    while (rem.size() >= q.size()) {
        size_t d = rem.size() - q.size();
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), rem.back().get_mpz_t(), q.back().get_mpz_t());
        quot[d] = c;
        for (size_t i = 0; i < q.size(); ++i) rem[i + d] -= c * q[i];
        strip(rem);
    }
    return quot;
}

int sign_at_infinity(const Poly& p, int direction) {
    int lc = sgn(p.back());
    size_t deg = p.size() - 1;
    if (direction > 0 || deg % 2 == 0) return lc;
    return -lc;
}

long sign_variations(const std::vector<int>& s) {
    long v = 0;
    for (size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] * s[i + 1] < 0) ++v;
    return v;
}

// distinct real roots of a squarefree primitive polynomial
long sturm_distinct_roots(const Poly& p) {
    if (p.size() <= 1) return 0;
    std::vector<Poly> chain;
    chain.push_back(p);
    Poly d = derivative(p);
    make_primitive(d);
    chain.push_back(std::move(d));
    while (chain.back().size() > 0) {
        bool neg = false;
        Poly r = pseudo_remainder(chain[chain.size() - 2], chain.back(), neg);
        if (r.empty()) break;
        // restore the Q-remainder's sign, then negate for the Sturm chain
        if (!neg)
            for (mpz_class& x : r) x = -x;
        make_primitive(r);
        chain.push_back(std::move(r));
    }
    std::vector<int> at_minus, at_plus;
    for (const Poly& q : chain) {
        if (q.empty()) continue;
        at_minus.push_back(sign_at_infinity(q, -1));
        at_plus.push_back(sign_at_infinity(q, +1));
    }
    return sign_variations(at_minus) - sign_variations(at_plus);
}

mpz_class binomial(long n, long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

}  // namespace

JensenPolynomial jensen(long d, long n, const PowerSeries& table) {
    if (d < 1) throw std::domain_error("jensen: degree must be >= 1");
    if (n < 0) throw std::domain_error("jensen: shift must be >= 0");
    if (table.truncation_order() < n + d)
        throw std::out_of_range("jensen: table does not cover n..n+d");
    JensenPolynomial J;
    J.degree = d;
    J.shift = n;
    for (long i = 0; i <= d; ++i)
        J.coefficients.push_back(binomial(d, i) * table.coefficient(n + i));
    return J;
}

bool is_hyperbolic(const std::vector<mpz_class>& poly) {
    Poly p = poly;
    strip(p);
    if (p.empty()) throw std::domain_error("is_hyperbolic: zero polynomial");
    if (p.size() == 1)
        throw std::domain_error("is_hyperbolic: degree must be >= 1");
    make_primitive(p);
    // deflate repeated roots: p / gcd(p, p')
    Poly g = gcd_prs(p, derivative(p));
    if (g.size() > 1) {
        make_primitive(g);
        p = exact_divide(p, g);
        strip(p);
        make_primitive(p);
    }
    long deg = static_cast<long>(p.size()) - 1;
    return sturm_distinct_roots(p) == deg;
}

std::vector<long> log_concavity_failures(long n_lo, long n_hi,
                                         const PowerSeries& table) {
    if (n_lo < 1) throw std::domain_error("log_concavity_failures: n_lo must be >= 1");
    if (table.truncation_order() < n_hi + 1)
        throw std::out_of_range("log_concavity_failures: table too short");
    std::vector<long> fails;
    for (long n = n_lo; n <= n_hi; ++n) {
        const mpz_class& a = table.coefficient(n);
        if (a * a <= table.coefficient(n + 1) * table.coefficient(n - 1))
            fails.push_back(n);
    }
    return fails;
}

RatioBoundReport ratio_bounds(long n, const PowerSeries& table, long digits) {
    if (n < 2) throw std::domain_error("ratio_bounds: n must be >= 2");
    if (table.truncation_order() < n + 1)
        throw std::out_of_range("ratio_bounds: table too short");
    long prec = digits_to_bits(digits);
    RatioBoundReport rep;
    rep.n = n;
    Ball pi = Ball::pi(prec);
    rep.v = pi * sqrt(Ball::from_mpq(mpq_class(3 * n, 2), prec));

    auto c = [&](long num, long den) { return Ball::from_mpq(mpq_class(num, den), prec); };
    Ball pi4 = pi * pi * pi * pi;
    Ball pi8 = pi4 * pi4;
    Ball pi12 = pi8 * pi4;
    Ball v3 = rep.v * rep.v * rep.v;
    Ball v4 = v3 * rep.v;
    Ball v5 = v4 * rep.v;
    Ball v6 = v5 * rep.v;
    Ball one = Ball::from_long(1, prec);

    rep.upsilon1 = one - c(9, 16) * pi4 / v3 + c(45, 16) * pi4 / v4 -
                   c(309, 1) / v5 - c(535, 1) / v6 - c(405, 2048) * pi8 / v6 -
                   c(729, 1) * pi12 / v6;
    rep.upsilon2 = one - c(9, 16) * pi4 / v3 + c(45, 16) * pi4 / v4 -
                   c(308, 1) / v5 - c(286, 1) / v6 + c(81, 256) * pi8 / v6 +
                   c(729, 16) * pi12 / v6;

    mpq_class exact_ratio(table.coefficient(n + 1) * table.coefficient(n - 1),
                          table.coefficient(n) * table.coefficient(n));
    exact_ratio.canonicalize();
    rep.ratio = Ball::from_mpq(exact_ratio, prec);

    Cert lo = certified_le(rep.upsilon1, rep.ratio);
    Cert hi = certified_le(rep.ratio, rep.upsilon2);
    if (lo == Cert::Yes && hi == Cert::Yes)
        rep.holds = Cert::Yes;
    else if (lo == Cert::No || hi == Cert::No)
        rep.holds = Cert::No;
    else
        rep.holds = Cert::Unknown;
    return rep;
}

ThresholdScan turan_threshold(long d, long horizon, const PowerSeries& table) {
    if (d < 2) throw std::domain_error("turan_threshold: d must be >= 2");
    if (table.truncation_order() < horizon + d - 1)
        throw std::out_of_range("turan_threshold: table does not cover horizon + d");
    ThresholdScan scan;
    scan.d = d;
    scan.verified_to = horizon;
    for (long n = 1; n <= horizon; ++n) {
        JensenPolynomial J = jensen(d, n - 1, table);
        if (!is_hyperbolic(J.coefficients)) scan.failures.push_back(n);
    }
    scan.last_failure = scan.failures.empty() ? 0 : scan.failures.back();
    scan.candidate_N = scan.last_failure + 1;
    return scan;
}

std::vector<mpz_class> hermite_polynomial(long d) {
    if (d < 0) throw std::domain_error("hermite_polynomial: d must be >= 0");
    // H_{k+1} = X H_k - 2k H_{k-1}
    Poly prev{1};
    if (d == 0) return prev;
    Poly cur{0, 1};
    for (long k = 1; k < d; ++k) {
        Poly next(cur.size() + 1);
        for (size_t i = 0; i < cur.size(); ++i) next[i + 1] = cur[i];
        for (size_t i = 0; i < prev.size(); ++i) next[i] -= 2 * k * prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Ball hermite_limit_check(long d, long n, long digits, const PowerSeries& table) {
    if (d < 2) throw std::domain_error("hermite_limit_check: d must be >= 2");
    if (n < 2)
        throw std::domain_error("hermite_limit_check: n too small (radicand <= 0)");
    if (table.truncation_order() < n + d)
        throw std::out_of_range("hermite_limit_check: table too short");
    long prec = digits_to_bits(digits);
    Ball pi = Ball::pi(prec);
    Ball nb = Ball::from_long(n, prec);
    Ball one = Ball::from_long(1, prec);

    // A = (pi/2) sqrt(3/(2n)) - 5/(4n)
    Ball A = pi / Ball::from_long(2, prec) *
                 sqrt(Ball::from_long(3, prec) / (Ball::from_long(2, prec) * nb)) -
             Ball::from_long(5, prec) / (Ball::from_long(4, prec) * nb);
    // delta^2 = (pi/8) sqrt(3/(2n^3)) - 5/(8n^2)
    Ball delta_sq = pi / Ball::from_long(8, prec) *
                        sqrt(Ball::from_long(3, prec) /
                             (Ball::from_long(2, prec) * nb * nb * nb)) -
                    Ball::from_long(5, prec) / (Ball::from_long(8, prec) * nb * nb);
    if (delta_sq.lower_double() <= 0.0)
        throw std::domain_error("hermite_limit_check: delta radicand not positive");
    Ball delta = sqrt(delta_sq);
    Ball inv_E = exp(-A);  // 1/e^{A}

    // coefficient of X^j in J((delta X - 1)/e^A):
    //   sum_{i>=j} c_i e^{-iA} C(i,j) delta^j (-1)^{i-j}
    std::vector<Ball> out;
    Ball scale = one / Ball::from_mpz(table.coefficient(n), prec);
    for (long j = 0; j <= d; ++j) {
        Ball acc(prec);
        for (long i = j; i <= d; ++i) {
            Ball term = Ball::from_mpz(binomial(d, i) * table.coefficient(n + i) *
                                           binomial(i, j),
                                       prec);
            Ball e_pow = one;
            for (long t = 0; t < i; ++t) e_pow = e_pow * inv_E;
            term = term * e_pow;
            if ((i - j) % 2 == 1) term = -term;
            acc = acc + term;
        }
        Ball delta_pow = one;
        for (long t = 0; t < j; ++t) delta_pow = delta_pow * delta;
        out.push_back(acc * delta_pow * scale);
    }
    // overall delta^{-d}
    Ball delta_d = one;
    for (long t = 0; t < d; ++t) delta_d = delta_d * delta;
    for (Ball& b : out) b = b / delta_d;

    std::vector<mpz_class> H = hermite_polynomial(d);
    Ball dev(prec);
    for (long j = 0; j <= d; ++j) {
        Ball diff = abs(out[static_cast<size_t>(j)] - Ball::from_mpz(H[static_cast<size_t>(j)], prec));
        mpfr_t du, dd;
        mpfr_init2(du, prec);
        mpfr_init2(dd, prec);
        diff.upper(du);
        dev.upper(dd);
        if (mpfr_cmp(du, dd) > 0) dev = diff;
        mpfr_clear(du);
        mpfr_clear(dd);
    }
    return dev;
}

SubadditivityScan subadditivity_scan(long max_sum, const PowerSeries& table) {
    if (table.truncation_order() < max_sum)
        throw std::out_of_range("subadditivity_scan: table too short");
    SubadditivityScan out;
    for (long s = 2; s <= max_sum; ++s) {
        for (long n = 1; 2 * n <= s; ++n) {
            long m = s - n;
            mpz_class lhs = table.coefficient(n) * table.coefficient(m);
            int c = cmp(lhs, table.coefficient(s));
            if (c < 0)
                out.violations.emplace_back(n, m);
            else if (c == 0)
                out.equalities.emplace_back(n, m);
        }
    }
    return out;
}

Ball subadditivity_crossover(long m, long digits) {
    if (m < 3 || m > 7)
        throw std::domain_error("subadditivity_crossover: m must be in 3..7");
    long prec = digits_to_bits(digits);
    Ball pi = Ball::pi(prec);
    Ball mb = Ball::from_long(m, prec);
    Ball one = Ball::from_long(1, prec);
    Ball sqrt_m = sqrt(mb);

    // F(B) = L(B) - log(m^{5/4} 2^{19/4} / 3^{3/4}) - log(H(B)), increasing in B
    Ball rhs_const = log(pow_q(mb, mpq_class(5, 4)) *
                         pow_q(Ball::from_long(2, prec), mpq_class(19, 4)) /
                         pow_q(Ball::from_long(3, prec), mpq_class(3, 4)));
    auto F = [&](const mpq_class& B) -> Ball {
        Ball Bb = Ball::from_mpq(B, prec);
        Ball Bm = Bb * mb;
        Ball sum = mb + Bm;
        Ball L = pi * sqrt(Ball::from_mpq(mpq_class(3, 2), prec)) *
                 (sqrt_m + sqrt(Bm) - sqrt(sum));
        Ball H = pow_q(Bb / (Bb + one), mpq_class(5, 4)) * (one + one / sqrt(sum)) /
                 ((one - Ball::from_mpq(mpq_class(8, 5), prec) / sqrt_m) *
                  (one - Ball::from_mpq(mpq_class(8, 5), prec) / sqrt(Bm)));
        return L - rhs_const - log(H);
    };

    mpq_class lo(1025, 1024);
    mpq_class hi(10000);
    if (F(lo).upper_double() >= 0.0 || F(hi).lower_double() <= 0.0)
        throw std::runtime_error("subadditivity_crossover: bracket failure");
    // bisection; F is increasing (L increasing, H decreasing for m >= 3)
    for (int it = 0; it < 64; ++it) {
        mpq_class mid = (lo + hi) / 2;
        mid.canonicalize();
        Ball f = F(mid);
        if (f.contains_zero()) {
            // sign not certifiable at this precision; the bracket still
            // contains the root, stop narrowing
            break;
        } else if (f.upper_double() < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (mpq_class(hi - lo) < mpq_class(1, 1000000000)) break;
    }
    Ball lob = Ball::from_mpq(lo, prec);
    Ball hib = Ball::from_mpq(hi, prec);
    mpfr_t l, h;
    mpfr_init2(l, prec);
    mpfr_init2(h, prec);
    lob.lower(l);
    hib.upper(h);
    Ball root = Ball::from_endpoints(l, h, prec);
    mpfr_clear(l);
    mpfr_clear(h);
    return root;
}

std::vector<std::pair<long, long>> general_log_concavity_scan(
    long n_max, const PowerSeries& table) {
    if (table.truncation_order() < 2 * n_max - 2)
        throw std::out_of_range("general_log_concavity_scan: table too short");
    std::vector<std::pair<long, long>> violations;
    for (long n = 3; n <= n_max; ++n) {
        mpz_class sq = table.coefficient(n) * table.coefficient(n);
        for (long m = 2; m < n; ++m) {
            if (sq <= table.coefficient(n - m) * table.coefficient(n + m))
                violations.emplace_back(n, m);
        }
    }
    return violations;
}

}  // namespace overcubic

#include "overcubic/qseries.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace overcubic {

const mpz_class& PowerSeries::coefficient(long n) const {
    if (n < 0 || n > truncation_order())
        throw std::out_of_range("PowerSeries::coefficient: exponent outside table");
    return coeffs[static_cast<size_t>(n)];
}

EtaQuotientSpec::EtaQuotientSpec(std::initializer_list<EtaFactor> fs)
    : EtaQuotientSpec(std::vector<EtaFactor>(fs)) {}

EtaQuotientSpec::EtaQuotientSpec(std::vector<EtaFactor> fs) {
    std::map<long, long> merged;
    for (const EtaFactor& f : fs) {
        if (f.scale < 1)
            throw std::domain_error("EtaQuotientSpec: scales must be positive");
        merged[f.scale] += f.exponent;
    }
    for (const auto& [scale, exponent] : merged)
        if (exponent != 0) factors.push_back({scale, exponent});
}

namespace {

// Exponent/sign pairs of (q^a;q^a)_inf = sum_j (-1)^j q^{a j(3j-1)/2}.
std::vector<std::pair<long, int>> pentagonal_terms(long a, long nmax) {
    std::vector<std::pair<long, int>> terms{{0, 1}};
    for (long j = 1;; ++j) {
        long e1 = a * (j * (3 * j - 1) / 2);
        long e2 = a * (j * (3 * j + 1) / 2);
        int sign = (j % 2 == 0) ? 1 : -1;
        bool any = false;
        if (e1 <= nmax) terms.emplace_back(e1, sign), any = true;
        if (e2 <= nmax) terms.emplace_back(e2, sign), any = true;
        if (!any) break;
    }
    return terms;
}

// dest *= the sparse series given by terms, truncated at nmax.
void multiply_sparse_inplace(PowerSeries& dest,
                             const std::vector<std::pair<long, int>>& terms,
                             long nmax) {
    PowerSeries out(nmax);
    for (const auto& [e, sign] : terms) {
        for (long i = 0; i + e <= nmax && i <= dest.truncation_order(); ++i) {
            const mpz_class& c = dest.coeffs[i];
            if (sgn(c) == 0) continue;
            if (sign > 0)
                out.coeffs[i + e] += c;
            else
                out.coeffs[i + e] -= c;
        }
    }
    dest = std::move(out);
}

}  // namespace

PowerSeries pochhammer_series(long scale, long nmax) {
    PowerSeries s(nmax);
    for (const auto& [e, sign] : pentagonal_terms(scale, nmax)) s.coeffs[e] += sign;
    return s;
}

PowerSeries multiply(const PowerSeries& a, const PowerSeries& b, long nmax) {
    PowerSeries out(nmax);
    long amax = std::min(a.truncation_order(), nmax);
    for (long i = 0; i <= amax; ++i) {
        const mpz_class& ai = a.coeffs[i];
        if (sgn(ai) == 0) continue;
        long jmax = std::min(b.truncation_order(), nmax - i);
        for (long j = 0; j <= jmax; ++j) {
            const mpz_class& bj = b.coeffs[j];
            if (sgn(bj) == 0) continue;
            mpz_addmul(out.coeffs[i + j].get_mpz_t(), ai.get_mpz_t(), bj.get_mpz_t());
        }
    }
    return out;
}

PowerSeries divide(const PowerSeries& num, const PowerSeries& den, long nmax) {
    if (den.truncation_order() < 0 || den.coeffs[0] != 1)
        throw std::domain_error("divide: denominator must have constant term 1");
    PowerSeries out(nmax);
    long dmax = den.truncation_order();
    for (long n = 0; n <= nmax; ++n) {
        mpz_class acc = (n <= num.truncation_order()) ? num.coeffs[n] : mpz_class(0);
        long jmax = std::min(n, dmax);
        for (long j = 1; j <= jmax; ++j) {
            const mpz_class& dj = den.coeffs[j];
            if (sgn(dj) == 0) continue;
            mpz_submul(acc.get_mpz_t(), dj.get_mpz_t(), out.coeffs[n - j].get_mpz_t());
        }
        out.coeffs[n] = std::move(acc);
    }
    return out;
}

PowerSeries expand_eta_quotient(const EtaQuotientSpec& spec, long nmax) {
    if (nmax < 0) throw std::domain_error("expand_eta_quotient: nmax must be >= 0");
    PowerSeries numerator(nmax);
    numerator.coeffs[0] = 1;
    PowerSeries denominator(nmax);
    denominator.coeffs[0] = 1;
    bool has_denominator = false;
    for (const EtaFactor& f : spec.factors) {
        auto terms = pentagonal_terms(f.scale, nmax);
        long reps = f.exponent > 0 ? f.exponent : -f.exponent;
        for (long r = 0; r < reps; ++r) {
            if (f.exponent > 0) {
                multiply_sparse_inplace(numerator, terms, nmax);
            } else {
                multiply_sparse_inplace(denominator, terms, nmax);
                has_denominator = true;
            }
        }
    }
    if (!has_denominator) return numerator;
    return divide(numerator, denominator, nmax);
}

PowerSeries overcubic_table(long nmax) {
    return expand_eta_quotient(EtaQuotientSpec{{1, -2}, {2, -1}, {4, 1}}, nmax);
}

}  // namespace overcubic

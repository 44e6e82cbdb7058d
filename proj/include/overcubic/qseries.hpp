#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <utility>
#include <vector>

namespace overcubic {

/* Formal power series in q, truncated after truncation_order(). Coefficients
 * are exact integers; multiplication and division never touch exponents past
 * the truncation order. */
struct PowerSeries {
    std::vector<mpz_class> coeffs;  // coeffs[n] = coefficient of q^n

    PowerSeries() = default;
    explicit PowerSeries(long truncation_order)
        : coeffs(static_cast<size_t>(truncation_order) + 1) {}

    long truncation_order() const { return static_cast<long>(coeffs.size()) - 1; }
    const mpz_class& coefficient(long n) const;
};

// One factor (q^scale; q^scale)_inf^exponent of an eta quotient.
struct EtaFactor {
    long scale;
    long exponent;
};

struct EtaQuotientSpec {
    std::vector<EtaFactor> factors;

    EtaQuotientSpec() = default;
    // Merges duplicate scales by summing exponents; rejects scale < 1.
    explicit EtaQuotientSpec(std::initializer_list<EtaFactor> fs);
    explicit EtaQuotientSpec(std::vector<EtaFactor> fs);
};

// Pentagonal-number expansion of (q^scale; q^scale)_inf to order nmax.
PowerSeries pochhammer_series(long scale, long nmax);

// Truncated product a*b.
PowerSeries multiply(const PowerSeries& a, const PowerSeries& b, long nmax);

// num/den with den constant term 1 (quadratic-time exact convolution).
PowerSeries divide(const PowerSeries& num, const PowerSeries& den, long nmax);

// prod (q^a;q^a)_inf^e over the spec's factors, expanded to order nmax.
// Positive exponents come from the pentagonal sparse form; negative ones go
// through exact series division.
PowerSeries expand_eta_quotient(const EtaQuotientSpec& spec, long nmax);

// Cubic overpartition counts: coefficient n is the number of partitions of n
// with even parts in two colors and the first occurrence of each distinct
// part optionally overlined. Expanded as (q^4;q^4) / ((q;q)^2 (q^2;q^2)).
PowerSeries overcubic_table(long nmax);

}  // namespace overcubic

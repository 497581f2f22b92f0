#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace kodaira {

// Bivariate integer power series in q and t, truncated at q-degree max_q and
// t-degree max_t. The truncation bound is part of the value: arithmetic
// results carry the pointwise minimum of the operands' bounds. Values are
// immutable once built (set_coeff is for construction only) and all
// operations are pure, so they can be shared across threads freely.
class TruncatedSeries2 {
public:
    TruncatedSeries2(int max_q, int max_t);
    static TruncatedSeries2 one(int max_q, int max_t);

    int max_q() const { return max_q_; }
    int max_t() const { return max_t_; }

    // Zero outside the truncation bounds.
    const mpz_class& coeff(int qexp, int texp) const;
    void set_coeff(int qexp, int texp, mpz_class v);

    // Coefficients of q^qexp as a dense vector t^0 .. t^max_t.
    std::vector<mpz_class> q_row(int qexp) const;

    bool operator==(const TruncatedSeries2& other) const;

    std::string str() const;  // for diagnostics

private:
    int max_q_;
    int max_t_;
    std::vector<mpz_class> c_;  // row-major, (max_q_+1) x (max_t_+1)

    friend TruncatedSeries2 series_mul_serial(const TruncatedSeries2&, const TruncatedSeries2&);
    friend TruncatedSeries2 series_mul_parallel(const TruncatedSeries2&, const TruncatedSeries2&);
};

// Product truncated at the joint bounds. series_mul dispatches to the OpenMP
// kernel for large outputs and to the serial reference otherwise; both
// compute identical exact coefficients.
TruncatedSeries2 series_mul(const TruncatedSeries2& a, const TruncatedSeries2& b);
TruncatedSeries2 series_mul_serial(const TruncatedSeries2& a, const TruncatedSeries2& b);
TruncatedSeries2 series_mul_parallel(const TruncatedSeries2& a, const TruncatedSeries2& b);

// (1 - sign*q^qexp t^texp)^exponent, truncated at (max_q, max_t). Negative
// exponents use the generalized binomial series. Requires qexp >= 1 so that
// every factor raises the q-degree and truncated products terminate.
TruncatedSeries2 series_binomial_pow(int qexp, int texp, int sign, long exponent,
                                     int max_q, int max_t);

}  // namespace kodaira

#include "kodaira/series.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>

#include "kodaira/errors.hpp"

namespace kodaira {

namespace {
const mpz_class kZero = 0;
}

TruncatedSeries2::TruncatedSeries2(int max_q, int max_t) : max_q_(max_q), max_t_(max_t) {
    if (max_q < 0 || max_t < 0)
        throw PreconditionError("TruncatedSeries2: negative truncation bound");
    c_.assign(static_cast<std::size_t>(max_q + 1) * (max_t + 1), kZero);
}

TruncatedSeries2 TruncatedSeries2::one(int max_q, int max_t) {
    TruncatedSeries2 s(max_q, max_t);
    s.set_coeff(0, 0, 1);
    return s;
}

const mpz_class& TruncatedSeries2::coeff(int qexp, int texp) const {
    if (qexp < 0 || texp < 0 || qexp > max_q_ || texp > max_t_) return kZero;
    return c_[static_cast<std::size_t>(qexp) * (max_t_ + 1) + texp];
}

void TruncatedSeries2::set_coeff(int qexp, int texp, mpz_class v) {
    if (qexp < 0 || texp < 0 || qexp > max_q_ || texp > max_t_)
        throw PreconditionError("TruncatedSeries2: coefficient index beyond truncation");
    c_[static_cast<std::size_t>(qexp) * (max_t_ + 1) + texp] = std::move(v);
}

std::vector<mpz_class> TruncatedSeries2::q_row(int qexp) const {
    std::vector<mpz_class> row(max_t_ + 1);
    for (int j = 0; j <= max_t_; ++j) row[j] = coeff(qexp, j);
    return row;
}

bool TruncatedSeries2::operator==(const TruncatedSeries2& other) const {
    return max_q_ == other.max_q_ && max_t_ == other.max_t_ && c_ == other.c_;
}

std::string TruncatedSeries2::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= max_q_; ++i)
        for (int j = 0; j <= max_t_; ++j) {
            const mpz_class& v = coeff(i, j);
            if (v == 0) continue;
            if (!first) os << " + ";
            first = false;
            os << v.get_str() << "*q^" << i << "*t^" << j;
        }
    if (first) os << "0";
    return os.str();
}

namespace {

// One output cell of the convolution: sum over split exponents that stay
// inside both operands' stored ranges.
mpz_class conv_cell(const TruncatedSeries2& a, const TruncatedSeries2& b, int i, int j) {
    mpz_class acc = 0;
    const int i1_hi = std::min(i, a.max_q());
    for (int i1 = 0; i1 <= i1_hi; ++i1) {
        if (i - i1 > b.max_q()) continue;
        const int j1_hi = std::min(j, a.max_t());
        for (int j1 = 0; j1 <= j1_hi; ++j1) {
            if (j - j1 > b.max_t()) continue;
            const mpz_class& av = a.coeff(i1, j1);
            if (av == 0) continue;
            const mpz_class& bv = b.coeff(i - i1, j - j1);
            if (bv == 0) continue;
            acc += av * bv;
        }
    }
    return acc;
}

}  // namespace

TruncatedSeries2 series_mul_serial(const TruncatedSeries2& a, const TruncatedSeries2& b) {
    TruncatedSeries2 out(std::min(a.max_q(), b.max_q()), std::min(a.max_t(), b.max_t()));
    for (int i = 0; i <= out.max_q_; ++i)
        for (int j = 0; j <= out.max_t_; ++j)
            out.c_[static_cast<std::size_t>(i) * (out.max_t_ + 1) + j] = conv_cell(a, b, i, j);
    return out;
}

TruncatedSeries2 series_mul_parallel(const TruncatedSeries2& a, const TruncatedSeries2& b) {
    TruncatedSeries2 out(std::min(a.max_q(), b.max_q()), std::min(a.max_t(), b.max_t()));
    const int nq = out.max_q_ + 1;
    const int nt = out.max_t_ + 1;
    // Each iteration writes one distinct cell; operands are read-only.
#pragma omp parallel for collapse(2) schedule(static)
    for (int i = 0; i < nq; ++i)
        for (int j = 0; j < nt; ++j)
            out.c_[static_cast<std::size_t>(i) * nt + j] = conv_cell(a, b, i, j);
    return out;
}

TruncatedSeries2 series_mul(const TruncatedSeries2& a, const TruncatedSeries2& b) {
    const long cells = static_cast<long>(std::min(a.max_q(), b.max_q()) + 1) *
                       (std::min(a.max_t(), b.max_t()) + 1);
    if (cells >= 512 && omp_get_max_threads() > 1) return series_mul_parallel(a, b);
    return series_mul_serial(a, b);
}

TruncatedSeries2 series_binomial_pow(int qexp, int texp, int sign, long exponent,
                                     int max_q, int max_t) {
    if (qexp < 1)
        throw PreconditionError("series_binomial_pow: q-exponent must be >= 1 "
                                "(factor would not raise q-degree)");
    if (texp < 0) throw PreconditionError("series_binomial_pow: negative t-exponent");
    if (sign != 1 && sign != -1) throw PreconditionError("series_binomial_pow: sign must be +-1");

    TruncatedSeries2 out(max_q, max_t);
    // Term i carries binom(exponent, i) * (-sign)^i at q^(i*qexp) t^(i*texp).
    // The binomial recurrence c_{i+1} = c_i*(e-i)/(i+1) stays exact over the
    // integers for any integer e, including negative e.
    mpz_class c = 1;
    for (long i = 0;; ++i) {
        const long qe = i * qexp;
        const long te = i * texp;
        if (qe > max_q || te > max_t) break;
        mpz_class term = c;
        if (sign == 1 && (i % 2) == 1) term = -term;
        out.set_coeff(static_cast<int>(qe), static_cast<int>(te), term);
        c *= mpz_class(exponent - i);
        mpz_class div(i + 1);
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), div.get_mpz_t());
    }
    return out;
}

}  // namespace kodaira

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "kodaira/errors.hpp"

namespace kodaira {

// Exact rational number. Always stored reduced with positive denominator;
// equality is value equality. All arithmetic in the artifact is exact --
// there is no floating point anywhere.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {}  // NOLINT: implicit by design, lets literals mix in
    Rat(const mpz_class& n) : q_(n) {}
    Rat(const mpz_class& num, const mpz_class& den) : q_(num, den) {
        if (den == 0) throw PreconditionError("Rat: zero denominator");
        q_.canonicalize();
    }
    Rat(long num, long den) : Rat(mpz_class(num), mpz_class(den)) {}

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    // Largest integer <= value.
    mpz_class floor() const {
        mpz_class r;
        mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return r;
    }
    mpz_class ceil() const {
        mpz_class r;
        mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
        return r;
    }
    // Nearest integer, halves rounded up.
    mpz_class round_nearest() const { return (*this + Rat(1, 2)).floor(); }

    std::int64_t to_int64() const {
        if (!is_integer()) throw InvariantError("Rat: to_int64 on non-integer " + str());
        mpz_class n = num();
        if (!n.fits_slong_p()) throw InvariantError("Rat: to_int64 overflow");
        return static_cast<std::int64_t>(n.get_si());
    }

    std::string str() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.q_ + b.q_); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.q_ - b.q_); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.q_ * b.q_); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.q_ == 0) throw PreconditionError("Rat: division by zero");
        return Rat(a.q_ / b.q_);
    }
    Rat operator-() const { return Rat(mpq_class(-q_)); }

    Rat& operator+=(const Rat& b) { q_ += b.q_; return *this; }
    Rat& operator-=(const Rat& b) { q_ -= b.q_; return *this; }
    Rat& operator*=(const Rat& b) { q_ *= b.q_; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

private:
    explicit Rat(const mpq_class& q) : q_(q) {}  // trusted: gmp results are canonical
    mpq_class q_;
};

}  // namespace kodaira

#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace wpvol {

/// Exact arbitrary-precision rational number. Values are always canonical:
/// gcd(|num|, den) = 1 and den > 0, so equal values have equal representations.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long n, long d);
    Rational(const mpz_class& n, const mpz_class& d);
    explicit Rational(const mpq_class& q);

    /// Parses "num", "-num" or "num/den" in base 10.
    explicit Rational(const std::string& text);

    static Rational from_decimal(const std::string& num, const std::string& den);

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    double to_double() const { return q_.get_d(); }

    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);  // throws std::domain_error on /0

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class q_;
};

// Exact integer helpers used throughout the volume machinery.
mpz_class factorial(unsigned long n);
mpz_class binomial(unsigned long n, unsigned long k);
/// (2k-1)!! for k >= 0, with the convention (-1)!! = 1.
mpz_class odd_double_factorial(long m);
Rational pow_rational(const Rational& base, unsigned long e);

/// Bernoulli number B_m under the convention B_1 = -1/2, from the recurrence
/// sum_{k=0}^{m} C(m+1, k) B_k = 0 with B_0 = 1. Values are memoized; the memo
/// table is guarded by a mutex so concurrent lookups are safe.
Rational bernoulli(unsigned long m);

/// Rational q_i with zeta(2i) = q_i * pi^{2i}. The i = 0 value is pinned to
/// zeta(0) = -1/2, the unique choice making the recursion kernels come out
/// with leading coefficient t^{2k} / (2k).
Rational zeta_even_coeff(unsigned long i);

}  // namespace wpvol

#include "wpvol/rational.hpp"

#include <mutex>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace wpvol {

namespace {

mpq_class make_canonical(mpz_class n, mpz_class d) {
    if (sgn(d) == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    mpq_class q(std::move(n), std::move(d));
    q.canonicalize();
    return q;
}

}  // namespace

Rational::Rational(long n, long d) : q_(make_canonical(mpz_class(n), mpz_class(d))) {}

Rational::Rational(const mpz_class& n, const mpz_class& d) : q_(make_canonical(n, d)) {}

Rational::Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

Rational::Rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        q_ = make_canonical(mpz_class(text), 1);
    } else {
        q_ = make_canonical(mpz_class(text.substr(0, slash)), mpz_class(text.substr(slash + 1)));
    }
}

Rational Rational::from_decimal(const std::string& num, const std::string& den) {
    return Rational(mpz_class(num), mpz_class(den));
}

std::string Rational::str() const {
    if (q_.get_den() == 1) {
        return q_.get_num().get_str();
    }
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class odd_double_factorial(long m) {
    if (m < -1 || m % 2 == 0) {
        throw std::invalid_argument("odd_double_factorial: expected odd m >= -1");
    }
    mpz_class r = 1;
    for (long v = m; v >= 3; v -= 2) {
        r *= v;
    }
    return r;
}

Rational pow_rational(const Rational& base, unsigned long e) {
    Rational r(1);
    for (unsigned long i = 0; i < e; ++i) {
        r *= base;
    }
    return r;
}

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational>& bernoulli_table() {
    static std::vector<Rational> table{Rational(1), Rational(-1, 2)};
    return table;
}

}  // namespace

Rational bernoulli(unsigned long m) {
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    auto& table = bernoulli_table();
    while (table.size() <= m) {
        const unsigned long k = table.size();
        // sum_{j=0}^{k} C(k+1, j) B_j = 0  =>  solve for B_k.
        Rational acc(0);
        for (unsigned long j = 0; j < k; ++j) {
            acc += Rational(binomial(k + 1, j), 1) * table[j];
        }
        table.push_back(-acc / Rational(mpz_class(k + 1), 1));
    }
    return table[m];
}

Rational zeta_even_coeff(unsigned long i) {
    if (i == 0) {
        return Rational(-1, 2);
    }
    // zeta(2i) = (-1)^{i+1} B_{2i} (2 pi)^{2i} / (2 (2i)!).
    mpz_class two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 2 * i - 1);
    Rational q = bernoulli(2 * i) * Rational(two_pow, factorial(2 * i));
    return (i % 2 == 0) ? -q : q;
}

}  // namespace wpvol

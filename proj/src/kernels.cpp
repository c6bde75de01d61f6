#include "wpvol/kernels.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace wpvol {

KernelPolynomial::KernelPolynomial(int k) : k_(k) {
    if (k < 1) {
        throw std::invalid_argument("KernelPolynomial: k must be positive");
    }
    coeff_by_i_.reserve(k + 1);
    const mpz_class lead = factorial(2 * k - 1);
    for (int i = 0; i <= k; ++i) {
        // (2k-1)! zeta(2i) (2^{2i+1} - 4) / (2k-2i)!  with zeta(2i) = q_i p^i.
        mpz_class two_pow;
        mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, 2 * i + 1);
        Rational c = Rational(lead, factorial(2 * k - 2 * i)) * zeta_even_coeff(i) *
                     Rational(two_pow - 4, 1);
        coeff_by_i_.push_back(c);
    }
}

PiPower KernelPolynomial::coeff_at(int i) const {
    if (i < 0 || i > k_) {
        throw std::invalid_argument("KernelPolynomial: coefficient index out of range");
    }
    return PiPower{coeff_by_i_[i], i};
}

VolumePolynomial KernelPolynomial::as_poly_in_x1() const {
    VolumePolynomial poly(0, 1);
    for (int i = 0; i <= k_; ++i) {
        poly.add_term(Monomial{i, {k_ - i}}, coeff_by_i_[i]);
    }
    return poly;
}

VolumePolynomial KernelPolynomial::pair_sum(int n, int k_index) const {
    if (k_index < 2 || k_index > n) {
        throw std::invalid_argument("pair_sum: boundary index out of range");
    }
    VolumePolynomial poly(0, n);
    for (int i = 0; i <= k_; ++i) {
        const int m = k_ - i;  // term c p^i t^{2m}
        // (s+d)^{2m} + (s-d)^{2m} = 2 sum_{u+v=m} C(2m, 2v) s^{2u} d^{2v}.
        for (int v = 0; v <= m; ++v) {
            Monomial mono{i, std::vector<int>(n, 0)};
            mono.x[0] += m - v;
            mono.x[k_index - 1] += v;
            poly.add_term(mono, coeff_by_i_[i] * Rational(2 * binomial(2 * m, 2 * v), 1));
        }
    }
    return poly;
}

double KernelPolynomial::eval(double t, double pi_value) const {
    const double p = pi_value * pi_value;
    double total = 0.0;
    for (int i = 0; i <= k_; ++i) {
        total += coeff_by_i_[i].to_double() * std::pow(p, i) * std::pow(t, 2 * (k_ - i));
    }
    return total;
}

const KernelPolynomial& kernel_F(int k) {
    static std::mutex mutex;
    static std::map<int, KernelPolynomial> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(k);
    if (it == cache.end()) {
        it = cache.emplace(k, KernelPolynomial(k)).first;
    }
    return it->second;
}

VolumePolynomial transform_double(int a, int b, int n) {
    if (a < 0 || b < 0) {
        throw std::invalid_argument("transform_double: negative exponent");
    }
    const Rational scale(factorial(2 * a + 1) * factorial(2 * b + 1),
                         factorial(2 * a + 2 * b + 3));
    const VolumePolynomial f = kernel_F(a + b + 2).as_poly_in_x1();
    VolumePolynomial out(0, n);
    for (const auto& [m, c] : f.terms()) {
        Monomial mono{m.p, std::vector<int>(n, 0)};
        mono.x[0] = m.x[0];
        out.add_term(mono, c * scale);
    }
    return out;
}

VolumePolynomial transform_boundary(int a, int k_index, int n) {
    if (a < 0) {
        throw std::invalid_argument("transform_boundary: negative exponent");
    }
    return kernel_F(a + 1).pair_sum(n, k_index);
}

double eval_H(double x, double y) {
    return 1.0 / (1.0 + std::exp((x + y) / 2)) + 1.0 / (1.0 + std::exp((x - y) / 2));
}

double eval_D(double x, double y, double z) {
    const double s = std::exp((y + z) / 2);
    return 2.0 * std::log((std::exp(x / 2) + s) / (std::exp(-x / 2) + s));
}

double eval_R(double x, double y, double z) {
    const double cy = std::cosh(y / 2);
    return x - std::log((cy + std::cosh((x + z) / 2)) / (cy + std::cosh((x - z) / 2)));
}

namespace {

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth) {
    const double m = (a + b) / 2;
    const double lm = (a + m) / 2;
    const double rm = (m + b) / 2;
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6 * (fa + 4 * flm + fm);
    const double right = (b - m) / 6 * (fm + 4 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15 * tol) {
        return left + right + delta / 15;
    }
    return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    const double m = (a + b) / 2;
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = (b - a) / 6 * (fa + 4 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 40);
}

// Upper bound for int_T^inf x^{2k-1} e^{-x/2} dx via the closed-form
// incomplete gamma: 2^{2k} Gamma(2k, T/2) with Gamma(m, z) = (m-1)! e^{-z}
// sum_{j<m} z^j / j!.
double tail_bound(int k, double t, double T) {
    const int m = 2 * k;
    const double z = T / 2;
    double sum = 0.0;
    double term = 1.0;  // z^j / j!
    for (int j = 0; j < m; ++j) {
        sum += term;
        term *= z / (j + 1);
    }
    double fac = 1.0;
    for (int j = 2; j < m; ++j) {
        fac *= j;
    }
    const double incomplete = fac * std::exp(-z) * sum;
    return 2.0 * std::cosh(t / 2) * std::pow(2.0, m) * incomplete;
}

}  // namespace

CheckResult quad_check_F(int k, double t, double tol) {
    if (k < 1 || tol <= 0) {
        throw std::invalid_argument("quad_check_F: need k >= 1, tol > 0");
    }
    std::ostringstream name;
    name << "quadrature F_" << (2 * k - 1) << "(t=" << t << ")";

    const double exact = kernel_F(k).eval(t, std::acos(-1.0));
    const double scale = std::max(1.0, std::fabs(exact));
    // The plain exponential cutoff is not enough once the x^{2k-1} factor
    // kicks in, so grow T until the closed-form tail bound is negligible.
    double T = 2 * std::log(10 / tol) + std::fabs(t);
    while (tail_bound(k, t, T) > tol * scale / 10 && T < 1e4) {
        T += 4;
    }
    const auto integrand = [k, t](double x) {
        return std::pow(x, 2 * k - 1) * eval_H(x, t);
    };
    const double numeric = integrate(integrand, 0.0, T, tol * scale / 10);
    const double rel = std::fabs(numeric - exact) / scale;

    std::ostringstream detail;
    detail << "relative error " << rel << " (tol " << tol << ")";
    if (!(rel <= tol)) {
        return CheckResult::fail(name.str(), detail.str());
    }
    return CheckResult::pass(name.str(), detail.str());
}

}  // namespace wpvol

#include "wpvol/intersections.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wpvol {

namespace {

int sum_of(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

bool any_negative(const std::vector<int>& v) {
    return std::any_of(v.begin(), v.end(), [](int a) { return a < 0; });
}

mpz_class pow2(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

std::string tuple_str(const std::vector<int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) {
            s += ",";
        }
        s += std::to_string(v[i]);
    }
    return s + ")";
}

CheckResult compare_polys(std::string name, const VolumePolynomial& lhs,
                          const VolumePolynomial& rhs) {
    VolumePolynomial diff = lhs;
    diff -= rhs;
    if (diff.is_zero()) {
        return CheckResult::pass(std::move(name));
    }
    const auto& [m, c] = *diff.terms().begin();
    std::ostringstream detail;
    detail << "mismatch at p^" << m.p << " x^" << tuple_str(m.x) << ": difference " << c;
    return CheckResult::fail(std::move(name), detail.str());
}

}  // namespace

Rational psi_kappa_integral(int g, const std::vector<int>& alpha, int m, VolumeCache& cache) {
    const int n = static_cast<int>(alpha.size());
    if (n == 0 || g < 0 || m < 0 || any_negative(alpha) || !stable(g, n)) {
        return Rational(0);
    }
    const int dim = 3 * g - 3 + n;
    if (sum_of(alpha) + m != dim) {
        return Rational(0);  // off the top dimension
    }
    const Rational c = cache.volume(g, n).coefficient(Monomial{m, alpha});
    // Invert the dictionary: c = (2 p)^m <psi^a kappa^m> / (2^{|a|} prod a! m!).
    mpz_class numer = factorial(m) * pow2(sum_of(alpha));
    for (int a : alpha) {
        numer *= factorial(a);
    }
    return c * Rational(numer, pow2(m));
}

Rational correlator(const std::vector<int>& alpha, VolumeCache& cache) {
    const int n = static_cast<int>(alpha.size());
    if (n == 0 || any_negative(alpha)) {
        return Rational(0);
    }
    const int total = sum_of(alpha);
    if ((total - n + 3) % 3 != 0) {
        return Rational(0);
    }
    const int g = (total - n + 3) / 3;
    if (g < 0) {
        return Rational(0);
    }
    return psi_kappa_integral(g, alpha, 0, cache);
}

Rational correlator(int g, const std::vector<int>& alpha, VolumeCache& cache) {
    const int n = static_cast<int>(alpha.size());
    if (n == 0 || any_negative(alpha) || sum_of(alpha) != 3 * g - 3 + n) {
        return Rational(0);
    }
    return psi_kappa_integral(g, alpha, 0, cache);
}

CheckResult check_string_dilaton_volume(int g, int n, VolumeCache& cache) {
    if (2 * g - 2 + n <= 0) {
        throw std::invalid_argument("check_string_dilaton_volume: need 2g-2+n > 0");
    }
    const std::string name =
        "string/dilaton (g=" + std::to_string(g) + ", n=" + std::to_string(n) + ")";
    const VolumePolynomial& extended = cache.volume(g, n + 1);

    VolumePolynomial string_lhs = extended.substitute_two_pi_i(n + 1);
    VolumePolynomial string_rhs(g, n);
    if (n > 0) {
        const VolumePolynomial& base = cache.volume(g, n);
        for (int k = 1; k <= n; ++k) {
            string_rhs += base.integrate_boundary(k);
        }
    }
    CheckResult string_check = compare_polys(name + " [string]", string_lhs, string_rhs);
    if (string_check.failed()) {
        return string_check;
    }

    VolumePolynomial dilaton_lhs =
        extended.derivative_x(n + 1).substitute_two_pi_i(n + 1) * Rational(2);
    VolumePolynomial dilaton_rhs(g, n);
    if (n > 0) {
        dilaton_rhs = cache.volume(g, n) * Rational(2 * g - 2 + n);
    } else {
        for (const auto& [m, c] : cache.volume(g, 0).terms()) {
            dilaton_rhs.add_term(m, c * Rational(2 * g - 2 + n));
        }
    }
    CheckResult dilaton_check = compare_polys(name + " [dilaton]", dilaton_lhs, dilaton_rhs);
    if (dilaton_check.failed()) {
        return dilaton_check;
    }
    return CheckResult::pass(name);
}

namespace {

VolumePolynomial multiply_by_x(const VolumePolynomial& v, int k) {
    VolumePolynomial out(v.genus(), v.boundaries());
    for (const auto& [m, c] : v.terms()) {
        Monomial shifted = m;
        shifted.x[k - 1] += 1;
        out.add_term(shifted, c);
    }
    return out;
}

}  // namespace

CheckResult check_second_derivative(int g, int n, VolumeCache& cache) {
    if (2 * g - 2 + n <= 0) {
        throw std::invalid_argument("check_second_derivative: need 2g-2+n > 0");
    }
    const std::string name =
        "second derivative (g=" + std::to_string(g) + ", n=" + std::to_string(n) + ")";
    const VolumePolynomial& extended = cache.volume(g, n + 1);

    const VolumePolynomial d1 = extended.derivative_x(n + 1);
    const VolumePolynomial d2 = d1.derivative_x(n + 1);
    VolumePolynomial lhs_pre = d1 * Rational(2);
    lhs_pre += multiply_by_x(d2, n + 1) * Rational(4);
    const VolumePolynomial lhs = lhs_pre.substitute_two_pi_i(n + 1);

    VolumePolynomial rhs(g, n);
    if (n > 0) {
        const VolumePolynomial& base = cache.volume(g, n);
        for (int k = 1; k <= n; ++k) {
            rhs += multiply_by_x(base.derivative_x(k), k) * Rational(2);
        }
        rhs -= base * Rational(4 * g - 4 + 2 * n);
    } else {
        for (const auto& [m, c] : cache.volume(g, 0).terms()) {
            rhs.add_term(m, c * Rational(-(4 * g - 4)));
        }
    }
    return compare_polys(name, lhs, rhs);
}

PiPower closed_volume(int g, VolumeCache& cache) {
    if (g < 2) {
        throw std::domain_error("closed_volume: need g >= 2");
    }
    const VolumePolynomial& v = cache.volume(g, 0);
    if (v.is_zero()) {
        return PiPower{Rational(0), 3 * g - 3};
    }
    const auto& [m, c] = *v.terms().begin();
    return PiPower{c, m.p};
}

CheckResult check_generalized_string(int g, const std::vector<int>& alpha, int m,
                                     VolumeCache& cache) {
    const int n = static_cast<int>(alpha.size());
    const std::string name = "generalized string (g=" + std::to_string(g) + ", alpha=" +
                             tuple_str(alpha) + ", m=" + std::to_string(m) + ")";
    Rational lhs(0);
    for (int j = 0; j <= m; ++j) {
        std::vector<int> ext = alpha;
        ext.push_back(j);
        Rational term = Rational(binomial(m, j), 1) * psi_kappa_integral(g, ext, m - j, cache);
        lhs += (j % 2 == 0) ? term : -term;
    }
    Rational rhs(0);
    for (int k = 0; k < n; ++k) {
        std::vector<int> lowered = alpha;
        lowered[k] -= 1;
        rhs += psi_kappa_integral(g, lowered, m, cache);
    }
    if (lhs == rhs) {
        return CheckResult::pass(name);
    }
    return CheckResult::fail(name, "lhs " + lhs.str() + " != rhs " + rhs.str());
}

CheckResult check_generalized_dilaton(int g, const std::vector<int>& alpha, int m,
                                      VolumeCache& cache) {
    const int n = static_cast<int>(alpha.size());
    const std::string name = "generalized dilaton (g=" + std::to_string(g) + ", alpha=" +
                             tuple_str(alpha) + ", m=" + std::to_string(m) + ")";
    Rational lhs(0);
    for (int j = 0; j <= m; ++j) {
        std::vector<int> ext = alpha;
        ext.push_back(j + 1);
        Rational term = Rational(binomial(m, j), 1) * psi_kappa_integral(g, ext, m - j, cache);
        lhs += (j % 2 == 0) ? term : -term;
    }
    const Rational rhs =
        Rational(2 * g - 2 + n) * psi_kappa_integral(g, alpha, m, cache);
    if (lhs == rhs) {
        return CheckResult::pass(name);
    }
    return CheckResult::fail(name, "lhs " + lhs.str() + " != rhs " + rhs.str());
}

PiPower bracket_norm(int g, const std::vector<int>& alpha, VolumeCache& cache) {
    const int n = static_cast<int>(alpha.size());
    if (n == 0 || g < 0 || any_negative(alpha)) {
        return PiPower{Rational(0), 0};
    }
    const int m = 3 * g - 3 + n - sum_of(alpha);
    if (m < 0 || !stable(g, n)) {
        return PiPower{Rational(0), 0};
    }
    mpz_class prefactor = 1;
    for (int a : alpha) {
        prefactor *= pow2(2 * a) * odd_double_factorial(2 * a + 1);
    }
    // int psi^a omega^m = (2 p)^m int psi^a kappa_1^m.
    const Rational value = Rational(prefactor * pow2(m), factorial(m)) *
                           psi_kappa_integral(g, alpha, m, cache);
    return PiPower{value, m};
}

PiPower bracket_b(int m) {
    if (m < 0) {
        throw std::invalid_argument("bracket_b: negative index");
    }
    if (m == 0) {
        return PiPower{Rational(-1) * zeta_even_coeff(0), 0};  // zeta(0)(1-2) = 1/2
    }
    const mpz_class denom = pow2(2 * m - 1);
    return PiPower{zeta_even_coeff(m) * Rational(denom - 1, denom), m};
}

CheckResult check_bracket_recursion(int g, const std::vector<int>& alpha, VolumeCache& cache) {
    const int n = static_cast<int>(alpha.size());
    const std::string name =
        "bracket recursion (g=" + std::to_string(g) + ", alpha=" + tuple_str(alpha) + ")";
    if (n < 1) {
        throw std::invalid_argument("check_bracket_recursion: empty tuple");
    }
    if (2 * g + n <= 3) {
        return CheckResult::inconclusive(name, "base case of the recursion (2g+n <= 3)");
    }
    if (!stable(g, n)) {
        return CheckResult::inconclusive(name, "unstable (g, n)");
    }
    const int cap = 3 * g - 3 + n - sum_of(alpha);
    const PiPower lhs = bracket_norm(g, alpha, cache);

    const int alpha1 = alpha[0];
    const std::vector<int> rest(alpha.begin() + 1, alpha.end());

    Rational acc(0);
    auto fold = [&](const Rational& scale, const PiPower& b, const PiPower& br) {
        if (br.is_zero() || b.is_zero()) {
            return;
        }
        if (b.pi2 + br.pi2 != cap) {
            throw std::logic_error("check_bracket_recursion: inhomogeneous term");
        }
        acc += scale * b.coeff * br.coeff;
    };
    auto fold_pair = [&](const Rational& scale, const PiPower& b, const PiPower& br1,
                         const PiPower& br2) {
        if (br1.is_zero() || br2.is_zero() || b.is_zero()) {
            return;
        }
        if (b.pi2 + br1.pi2 + br2.pi2 != cap) {
            throw std::logic_error("check_bracket_recursion: inhomogeneous term");
        }
        acc += scale * b.coeff * br1.coeff * br2.coeff;
    };

    for (int m = 0; m <= cap; ++m) {
        const PiPower b = bracket_b(m);

        // Pants leaving a connected surface of genus g-1.
        if (g >= 1) {
            for (int a = 0; a + 2 <= alpha1 + m; ++a) {
                const int bb = alpha1 + m - 2 - a;
                std::vector<int> child{a, bb};
                child.insert(child.end(), rest.begin(), rest.end());
                fold(Rational(16), b, bracket_norm(g - 1, child, cache));
            }
        }

        // Pants splitting the surface: ordered pairs (g1, I), (g2, J).
        for (int g1 = 0; g1 <= g; ++g1) {
            const int g2 = g - g1;
            for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
                std::vector<int> part_i{0}, part_j{0};
                for (int t = 0; t < n - 1; ++t) {
                    ((mask >> t) & 1 ? part_i : part_j).push_back(rest[t]);
                }
                for (int a = 0; a + 2 <= alpha1 + m; ++a) {
                    part_i[0] = a;
                    part_j[0] = alpha1 + m - 2 - a;
                    fold_pair(Rational(16), b, bracket_norm(g1, part_i, cache),
                              bracket_norm(g2, part_j, cache));
                }
            }
        }

        // Pants absorbing one further boundary.
        for (int k = 0; k < n - 1; ++k) {
            const int merged = alpha1 + rest[k] + m - 1;
            if (merged < 0) {
                continue;
            }
            std::vector<int> child;
            for (int t = 0; t < n - 1; ++t) {
                if (t != k) {
                    child.push_back(rest[t]);
                }
            }
            child.insert(child.begin(), merged);
            // Re-order so the merged index sits where label k used to be; the
            // bracket is symmetric, so position does not matter.
            fold(Rational(8 * (2 * rest[k] + 1)), b, bracket_norm(g, child, cache));
        }
    }

    if (lhs.coeff == acc) {
        return CheckResult::pass(name);
    }
    return CheckResult::fail(name, "lhs " + lhs.coeff.str() + " p^" + std::to_string(lhs.pi2) +
                                       " != rhs " + acc.str());
}

namespace {

void enumerate_compositions(int n, int budget, std::vector<int>& current,
                            const std::function<void(const std::vector<int>&)>& emit) {
    if (static_cast<int>(current.size()) == n) {
        emit(current);
        return;
    }
    for (int a = 0; a <= budget; ++a) {
        current.push_back(a);
        enumerate_compositions(n, budget - a, current, emit);
        current.pop_back();
    }
}

}  // namespace

CheckResult check_dictionary_roundtrip(int g, int n, VolumeCache& cache) {
    const std::string name =
        "dictionary roundtrip (g=" + std::to_string(g) + ", n=" + std::to_string(n) + ")";
    const VolumePolynomial& v = cache.volume(g, n);
    const int dim = 3 * g - 3 + n;

    VolumePolynomial rebuilt(g, n);
    std::vector<int> current;
    enumerate_compositions(n, dim, current, [&](const std::vector<int>& alpha) {
        const int m = dim - sum_of(alpha);
        const Rational value = psi_kappa_integral(g, alpha, m, cache);
        if (value.is_zero()) {
            return;
        }
        mpz_class denom = factorial(m) * pow2(sum_of(alpha));
        for (int a : alpha) {
            denom *= factorial(a);
        }
        rebuilt.add_term(Monomial{m, alpha}, value * Rational(pow2(m), denom));
    });
    return compare_polys(name, v, rebuilt);
}

}  // namespace wpvol

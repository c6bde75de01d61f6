#include "wpvol/zograf.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace wpvol {

Rational zograf_a(int n) {
    if (n < 3) {
        throw std::invalid_argument("zograf_a: need n >= 3");
    }
    static std::mutex mutex;
    static std::vector<Rational> table{Rational(1)};  // table[i] = a_{i+3}
    std::lock_guard<std::mutex> lock(mutex);
    while (static_cast<int>(table.size()) <= n - 3) {
        const int m = static_cast<int>(table.size()) + 3;
        Rational acc(0);
        for (int k = 1; k <= m - 3; ++k) {
            acc += Rational(k * (m - k - 2), m - 1) *
                   Rational(binomial(m - 4, k - 1) * binomial(m, k + 1), 1) *
                   table[k + 2 - 3] * table[m - k - 3];
        }
        table.push_back(acc / Rational(2));
    }
    return table[n - 3];
}

CheckResult check_zograf(int n, VolumeCache& cache) {
    const std::string name = "zograf constant term (n=" + std::to_string(n) + ")";
    if (n < 4) {
        throw std::invalid_argument("check_zograf: need n >= 4");
    }
    mpz_class two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, n - 3);
    const Rational expected = zograf_a(n) * Rational(two_pow, factorial(n - 3));

    const Rational actual =
        cache.volume(0, n).coefficient(Monomial{n - 3, std::vector<int>(n, 0)});
    if (expected == actual) {
        return CheckResult::pass(name);
    }
    return CheckResult::fail(name, "recursion gives " + expected.str() + " p^" +
                                       std::to_string(n - 3) + ", volume constant term is " +
                                       actual.str());
}

}  // namespace wpvol

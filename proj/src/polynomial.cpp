#include "wpvol/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace wpvol {

int Monomial::total_degree() const {
    return p + std::accumulate(x.begin(), x.end(), 0);
}

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.total_degree();
    const int db = b.total_degree();
    if (da != db) {
        return da < db;
    }
    if (a.p != b.p) {
        return a.p < b.p;
    }
    return a.x < b.x;
}

VolumePolynomial::VolumePolynomial(int g, int n) : g_(g), n_(n) {
    if (g < 0 || n < 0) {
        throw std::invalid_argument("VolumePolynomial: negative genus or boundary count");
    }
}

VolumePolynomial VolumePolynomial::constant(int g, int n, const Rational& c) {
    VolumePolynomial v(g, n);
    v.add_term(Monomial{0, std::vector<int>(n, 0)}, c);
    return v;
}

void VolumePolynomial::add_term(const Monomial& m, const Rational& c) {
    if (static_cast<int>(m.x.size()) != n_) {
        throw std::invalid_argument("VolumePolynomial: monomial arity mismatch");
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Rational VolumePolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void VolumePolynomial::check_shape(const VolumePolynomial& o) const {
    if (n_ != o.n_) {
        throw std::invalid_argument("VolumePolynomial: mismatched variable count");
    }
}

VolumePolynomial& VolumePolynomial::operator+=(const VolumePolynomial& o) {
    check_shape(o);
    for (const auto& [m, c] : o.terms_) {
        add_term(m, c);
    }
    return *this;
}

VolumePolynomial& VolumePolynomial::operator-=(const VolumePolynomial& o) {
    check_shape(o);
    for (const auto& [m, c] : o.terms_) {
        add_term(m, -c);
    }
    return *this;
}

VolumePolynomial operator*(const VolumePolynomial& a, const VolumePolynomial& b) {
    a.check_shape(b);
    VolumePolynomial r(a.g_, a.n_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m{ma.p + mb.p, ma.x};
            for (int i = 0; i < a.n_; ++i) {
                m.x[i] += mb.x[i];
            }
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

VolumePolynomial operator*(const VolumePolynomial& a, const Rational& c) {
    VolumePolynomial r(a.g_, a.n_);
    if (c.is_zero()) {
        return r;
    }
    for (const auto& [m, coeff] : a.terms_) {
        r.terms_.emplace(m, coeff * c);
    }
    return r;
}

bool operator==(const VolumePolynomial& a, const VolumePolynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
}

VolumePolynomial VolumePolynomial::derivative_x(int k) const {
    if (k < 1 || k > n_) {
        throw std::invalid_argument("derivative_x: index out of range");
    }
    VolumePolynomial r(g_, n_);
    for (const auto& [m, c] : terms_) {
        const int a = m.x[k - 1];
        if (a == 0) {
            continue;
        }
        Monomial d = m;
        d.x[k - 1] = a - 1;
        r.add_term(d, c * Rational(a));
    }
    return r;
}

VolumePolynomial VolumePolynomial::integrate_boundary(int k) const {
    if (k < 1 || k > n_) {
        throw std::invalid_argument("integrate_boundary: index out of range");
    }
    VolumePolynomial r(g_, n_);
    for (const auto& [m, c] : terms_) {
        const int a = m.x[k - 1];
        Monomial d = m;
        d.x[k - 1] = a + 1;
        r.add_term(d, c / Rational(2 * a + 2));
    }
    return r;
}

VolumePolynomial VolumePolynomial::substitute_two_pi_i(int k) const {
    if (k < 1 || k > n_) {
        throw std::invalid_argument("substitute_two_pi_i: index out of range");
    }
    VolumePolynomial r(g_, n_ - 1);
    for (const auto& [m, c] : terms_) {
        const int a = m.x[k - 1];
        Monomial d;
        d.p = m.p + a;  // (2 pi i)^2 = -4p keeps the grading
        d.x.reserve(n_ - 1);
        for (int i = 0; i < n_; ++i) {
            if (i != k - 1) {
                d.x.push_back(m.x[i]);
            }
        }
        Rational scale(1);
        for (int i = 0; i < a; ++i) {
            scale *= Rational(-4);
        }
        r.add_term(d, c * scale);
    }
    return r;
}

double VolumePolynomial::eval(const std::vector<double>& lengths, double pi_value) const {
    if (static_cast<int>(lengths.size()) != n_) {
        throw std::invalid_argument("eval: expected one length per boundary");
    }
    const double p = pi_value * pi_value;
    double total = 0.0;
    for (const auto& [m, c] : terms_) {
        double t = c.to_double() * std::pow(p, m.p);
        for (int i = 0; i < n_; ++i) {
            t *= std::pow(lengths[i] * lengths[i], m.x[i]);
        }
        total += t;
    }
    return total;
}

bool VolumePolynomial::is_homogeneous() const {
    const int d = dimension();
    for (const auto& [m, c] : terms_) {
        if (m.total_degree() != d) {
            return false;
        }
    }
    return true;
}

std::optional<std::pair<int, int>> VolumePolynomial::symmetry_violation() const {
    for (int k = 1; k < n_; ++k) {
        for (const auto& [m, c] : terms_) {
            Monomial swapped = m;
            std::swap(swapped.x[k - 1], swapped.x[k]);
            if (coefficient(swapped) != c) {
                return std::make_pair(k, k + 1);
            }
        }
    }
    return std::nullopt;
}

bool VolumePolynomial::has_nonnegative_coefficients() const {
    for (const auto& [m, c] : terms_) {
        if (c.sign() < 0) {
            return false;
        }
    }
    return true;
}

void VolumePolynomial::assert_volume_invariants() const {
    if (!is_homogeneous()) {
        throw std::logic_error("volume invariant violated: term degree != 3g-3+n");
    }
    if (auto bad = symmetry_violation()) {
        throw std::logic_error("volume invariant violated: asymmetric in x_" +
                               std::to_string(bad->first) + ", x_" + std::to_string(bad->second));
    }
    if (!has_nonnegative_coefficients()) {
        throw std::logic_error("volume invariant violated: negative coefficient");
    }
}

namespace {

std::vector<int> partition_of(const std::vector<int>& exps) {
    std::vector<int> part;
    for (int e : exps) {
        if (e > 0) {
            part.push_back(e);
        }
    }
    std::sort(part.rbegin(), part.rend());
    return part;
}

// Distinct permutations of the padded partition, lexicographically.
std::vector<std::vector<int>> orbit_of(const std::vector<int>& partition, int n) {
    std::vector<int> exps(n, 0);
    std::copy(partition.begin(), partition.end(), exps.begin());
    std::sort(exps.begin(), exps.end());
    std::vector<std::vector<int>> orbit;
    do {
        orbit.push_back(exps);
    } while (std::next_permutation(exps.begin(), exps.end()));
    return orbit;
}

}  // namespace

std::vector<SymmetricTerm> VolumePolynomial::monomial_symmetric() const {
    if (auto bad = symmetry_violation()) {
        throw std::invalid_argument("monomial_symmetric: polynomial is not symmetric in x_" +
                                    std::to_string(bad->first) + ", x_" +
                                    std::to_string(bad->second));
    }
    std::vector<SymmetricTerm> out;
    for (const auto& [m, c] : terms_) {
        std::vector<int> sorted = m.x;
        std::sort(sorted.rbegin(), sorted.rend());
        if (sorted != m.x) {
            continue;  // emit each orbit once, from its sorted representative
        }
        out.push_back(SymmetricTerm{partition_of(m.x), m.p, c});
    }
    std::sort(out.begin(), out.end(), [](const SymmetricTerm& a, const SymmetricTerm& b) {
        const int da = std::accumulate(a.partition.begin(), a.partition.end(), 0);
        const int db = std::accumulate(b.partition.begin(), b.partition.end(), 0);
        if (da != db) {
            return da > db;
        }
        if (a.partition != b.partition) {
            return a.partition > b.partition;
        }
        return a.pi2 < b.pi2;
    });
    return out;
}

VolumePolynomial VolumePolynomial::from_monomial_symmetric(int g, int n,
                                                           const std::vector<SymmetricTerm>& sym) {
    VolumePolynomial v(g, n);
    for (const auto& term : sym) {
        if (static_cast<int>(term.partition.size()) > n) {
            throw std::invalid_argument("from_monomial_symmetric: partition longer than n");
        }
        for (const auto& exps : orbit_of(term.partition, n)) {
            v.add_term(Monomial{term.pi2, exps}, term.coeff);
        }
    }
    return v;
}

namespace {

std::string superscript(int value) {
    static const char* digits[10] = {"⁰", "¹", "²", "³", "⁴",
                                     "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string plain = std::to_string(value);
    std::string out;
    for (char ch : plain) {
        out += digits[ch - '0'];
    }
    return out;
}

}  // namespace

std::string pi_power_str(const Rational& coeff, int pi2) {
    const mpz_class num = coeff.num();
    const mpz_class den = coeff.den();
    std::string s;
    if (num < 0) {
        s += "-";
    }
    const mpz_class abs_num = abs(num);
    if (pi2 == 0 || abs_num != 1) {
        s += abs_num.get_str();
    }
    if (pi2 > 0) {
        s += "π" + superscript(2 * pi2);
    }
    if (den != 1) {
        s += "/" + den.get_str();
    }
    return s;
}

std::string PiPower::str() const { return pi_power_str(coeff, pi2); }

bool operator==(const PiPower& a, const PiPower& b) {
    if (a.coeff.is_zero() && b.coeff.is_zero()) {
        return true;
    }
    return a.coeff == b.coeff && a.pi2 == b.pi2;
}

PiPower operator*(const PiPower& a, const PiPower& b) {
    return PiPower{a.coeff * b.coeff, a.pi2 + b.pi2};
}

std::string VolumePolynomial::human() const {
    const auto sym = monomial_symmetric();
    if (sym.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& term : sym) {
        if (!out.empty()) {
            out += " + ";
        }
        std::string coeff = pi_power_str(term.coeff, term.pi2);
        if (term.partition.empty()) {
            out += coeff;
            continue;
        }
        std::string part;
        for (size_t i = 0; i < term.partition.size(); ++i) {
            if (i) {
                part += ",";
            }
            part += std::to_string(term.partition[i]);
        }
        if (coeff == "1") {
            out += "m_(" + part + ")";
        } else {
            out += coeff + " m_(" + part + ")";
        }
    }
    return out;
}

}  // namespace wpvol

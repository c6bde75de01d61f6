#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wpvol/rational.hpp"

namespace wpvol {

/// Exponent vector of a single term: p is the power of the formal generator
/// p = pi^2, x[k] the power of x_{k+1} = L_{k+1}^2.
struct Monomial {
    int p = 0;
    std::vector<int> x;

    int total_degree() const;
    friend bool operator==(const Monomial& a, const Monomial& b) = default;
};

/// Graded lexicographic order on (p, x), used everywhere a deterministic
/// term order is needed.
struct GradedLex {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

using TermMap = std::map<Monomial, Rational, GradedLex>;

/// One orbit of the symmetric group in the monomial symmetric basis:
/// coeff * pi^{2 pi2} * m_{partition}.
struct SymmetricTerm {
    std::vector<int> partition;  // weakly decreasing, no zeros
    int pi2 = 0;                 // power of p = pi^2
    Rational coeff;
};

/// Sparse exact polynomial in p = pi^2 and x_1, ..., x_n, tagged with (g, n).
/// The tag records which moduli space the polynomial belongs to; intermediate
/// results of the recursion carry the tag of their target space. For a true
/// volume polynomial V_{g,n} the invariants checked by
/// assert_volume_invariants() hold: every term has p + |x| = 3g-3+n, the
/// polynomial is symmetric in the x-variables, and all coefficients are >= 0.
class VolumePolynomial {
public:
    VolumePolynomial(int g, int n);

    static VolumePolynomial constant(int g, int n, const Rational& c);

    int genus() const { return g_; }
    int boundaries() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int dimension() const { return 3 * g_ - 3 + n_; }

    /// Accumulates c * monomial, pruning the term if the sum vanishes.
    void add_term(const Monomial& m, const Rational& c);

    Rational coefficient(const Monomial& m) const;

    VolumePolynomial& operator+=(const VolumePolynomial& o);
    VolumePolynomial& operator-=(const VolumePolynomial& o);
    friend VolumePolynomial operator+(VolumePolynomial a, const VolumePolynomial& b) {
        return a += b;
    }
    friend VolumePolynomial operator-(VolumePolynomial a, const VolumePolynomial& b) {
        return a -= b;
    }
    friend VolumePolynomial operator*(const VolumePolynomial& a, const VolumePolynomial& b);
    friend VolumePolynomial operator*(const VolumePolynomial& a, const Rational& c);
    friend VolumePolynomial operator*(const Rational& c, const VolumePolynomial& a) {
        return a * c;
    }

    friend bool operator==(const VolumePolynomial& a, const VolumePolynomial& b);

    /// Formal d/dx_k, 1-based k.
    VolumePolynomial derivative_x(int k) const;

    /// int_0^{L_k} L_k P dL_k expressed in the x-variables: x_k^a maps to
    /// x_k^{a+1} / (2a+2). No constant of integration appears.
    VolumePolynomial integrate_boundary(int k) const;

    /// Formal evaluation L_k = 2 pi i, i.e. x_k -> -4p. The k-th variable is
    /// removed and the remaining ones re-indexed; the result lives in n-1
    /// variables and may have coefficients of either sign.
    VolumePolynomial substitute_two_pi_i(int k) const;

    /// Floating evaluation with x_k = L_k^2 and p = pi_value^2.
    double eval(const std::vector<double>& lengths, double pi_value) const;

    bool is_homogeneous() const;
    /// Returns an index pair (1-based) whose transposition changes the
    /// polynomial, or nullopt when fully symmetric.
    std::optional<std::pair<int, int>> symmetry_violation() const;
    bool has_nonnegative_coefficients() const;
    /// Throws std::logic_error when any volume-polynomial invariant fails.
    void assert_volume_invariants() const;

    /// Regroups a symmetric polynomial in the monomial symmetric basis,
    /// sorted by total x-degree descending, then partition descending
    /// lexicographically. Throws std::invalid_argument naming a violating
    /// index pair when the polynomial is not symmetric.
    std::vector<SymmetricTerm> monomial_symmetric() const;

    static VolumePolynomial from_monomial_symmetric(int g, int n,
                                                    const std::vector<SymmetricTerm>& terms);

    /// Table-style rendering, e.g. "1/192 m_(2) + 1/96 m_(1,1) + π²/12 m_(1) + π⁴/4".
    std::string human() const;

private:
    void check_shape(const VolumePolynomial& o) const;

    int g_;
    int n_;
    TermMap terms_;
};

/// Coefficient times a pure power of p = pi^2 (closed volumes, brackets, ...).
struct PiPower {
    Rational coeff;
    int pi2 = 0;

    bool is_zero() const { return coeff.is_zero(); }
    friend bool operator==(const PiPower& a, const PiPower& b);
    friend PiPower operator*(const PiPower& a, const PiPower& b);
    std::string str() const;
};

/// Renders coeff * pi^{2*pi2} in the table style ("2π²", "π⁴/4", "169π⁶/2880").
std::string pi_power_str(const Rational& coeff, int pi2);

}  // namespace wpvol

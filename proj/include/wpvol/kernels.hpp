#pragma once

#include <vector>

#include "wpvol/check_report.hpp"
#include "wpvol/polynomial.hpp"
#include "wpvol/rational.hpp"

namespace wpvol {

/// The even degree-2k polynomial F_{2k-1}(t) = int_0^inf x^{2k-1} H(x,t) dx,
/// where H is the recursion kernel. The coefficient of t^{2k-2i} is an exact
/// rational multiple of p^i; the leading coefficient is 1/(2k).
class KernelPolynomial {
public:
    explicit KernelPolynomial(int k);

    int k() const { return k_; }
    int degree() const { return 2 * k_; }

    /// Coefficient of t^{2k-2i} as a pure p-power, 0 <= i <= k.
    PiPower coeff_at(int i) const;

    /// The polynomial in x1 = t^2 over Q[p], as a 1-variable VolumePolynomial.
    VolumePolynomial as_poly_in_x1() const;

    /// F(s+d) + F(s-d), polynomial in s^2 and d^2; returned in the ambient
    /// n-variable ring with s^2 placed at x_1 and d^2 at x_k.
    VolumePolynomial pair_sum(int n, int k_index) const;

    double eval(double t, double pi_value) const;

private:
    int k_;
    std::vector<Rational> coeff_by_i_;  // value at i multiplies p^i t^{2k-2i}
};

/// F_{2k-1}; results are memoized.
const KernelPolynomial& kernel_F(int k);

/// Contribution of a child monomial x^{2a} y^{2b} under the two-variable
/// kernel integral: (2a+1)! (2b+1)! / (2a+2b+3)! * F_{2a+2b+3}(L_1),
/// returned as a polynomial in x_1 over Q[p] inside an n-variable ring.
VolumePolynomial transform_double(int a, int b, int n);

/// Contribution of a child monomial x^{2a} under the boundary kernel:
/// F_{2a+1}(L_1 + L_k) + F_{2a+1}(L_1 - L_k), expanded in x_1 and x_k.
VolumePolynomial transform_boundary(int a, int k_index, int n);

// McShane kernel functions, used only for numeric sanity checks.
double eval_H(double x, double y);
double eval_D(double x, double y, double z);
double eval_R(double x, double y, double z);

/// Compares adaptive quadrature of int_0^inf x^{2k-1} H(x,t) dx against the
/// exact kernel polynomial; passes when the relative error is within tol.
CheckResult quad_check_F(int k, double t, double tol);

}  // namespace wpvol

#pragma once

#include <vector>

#include "wpvol/check_report.hpp"
#include "wpvol/recursion.hpp"

namespace wpvol {

/// Exact value of int_{Mbar_{g,n}} psi_1^{a_1} ... psi_n^{a_n} kappa_1^m,
/// read off the coefficients of V_{g,n}: the coefficient of prod L_k^{2a_k}
/// equals (2 pi^2)^m <psi^a kappa_1^m> / (2^{|a|} prod a_k! m!) with
/// m = 3g-3+n-|a|. Off-dimension requests (m != 3g-3+n-|a|) return 0.
Rational psi_kappa_integral(int g, const std::vector<int>& alpha, int m, VolumeCache& cache);

/// Top psi intersection <tau_{a_1} ... tau_{a_n}>; the genus is implied by
/// |a| = 3g-3+n and the value is 0 when that genus is non-integral or
/// negative, or when n = 0.
Rational correlator(const std::vector<int>& alpha, VolumeCache& cache);

/// <tau_alpha> on a prescribed genus; 0 unless |alpha| = 3g-3+n.
Rational correlator(int g, const std::vector<int>& alpha, VolumeCache& cache);

/// String equation:   V_{g,n+1}(L, 2 pi i) = sum_k int_0^{L_k} L_k V_{g,n} dL_k.
/// Dilaton equation, restated over Q[p]:
///   2 (dV_{g,n+1}/dx_{n+1})|_{x_{n+1} = -4p} = (2g-2+n) V_{g,n}.
CheckResult check_string_dilaton_volume(int g, int n, VolumeCache& cache);

/// Second-derivative relation at 2 pi i, restated over Q[p] via
/// d^2/dL^2 = 2 d/dx + 4x d^2/dx^2 and L_k d/dL_k = 2 x_k d/dx_k.
CheckResult check_second_derivative(int g, int n, VolumeCache& cache);

/// V_{g,0} for g >= 2, as a pure power of p. Exact.
PiPower closed_volume(int g, VolumeCache& cache);

/// Generalized string/dilaton relations between psi-kappa numbers on
/// consecutive moduli spaces, for |alpha| + m = 3g-3+(n+1).
CheckResult check_generalized_string(int g, const std::vector<int>& alpha, int m,
                                     VolumeCache& cache);
CheckResult check_generalized_dilaton(int g, const std::vector<int>& alpha, int m,
                                      VolumeCache& cache);

/// Normalized volume coefficient
/// [tau_{a_1} ... tau_{a_n}]_{g,n} = prod(2^{2a_k} (2a_k+1)!!) / m! *
/// int psi^a omega^m with omega = 2 pi^2 kappa_1 and m = 3g-3+n-|a|.
PiPower bracket_norm(int g, const std::vector<int>& alpha, VolumeCache& cache);

/// b_m = zeta(2m) (1 - 2^{1-2m}) as an exact multiple of p^m; b_0 = 1/2.
PiPower bracket_b(int m);

/// Verifies the recursion satisfied by the normalized coefficients
/// (the bracket form of the volume recursion). Valid for 2g + n > 3;
/// smaller cases are the recursion's base cases and report inconclusive.
CheckResult check_bracket_recursion(int g, const std::vector<int>& alpha, VolumeCache& cache);

/// Rebuilds V_{g,n} from all extracted psi-kappa numbers and compares
/// exactly with the cached polynomial.
CheckResult check_dictionary_roundtrip(int g, int n, VolumeCache& cache);

}  // namespace wpvol

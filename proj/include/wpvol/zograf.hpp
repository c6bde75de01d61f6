#pragma once

#include "wpvol/check_report.hpp"
#include "wpvol/recursion.hpp"

namespace wpvol {

/// a_n from the genus-0 recursion
///   a_n = 1/2 sum_{k=1}^{n-3} k(n-k-2)/(n-1) C(n-4, k-1) C(n, k+1)
///         a_{k+2} a_{n-k},     a_3 = 1.
/// Memoized; throws for n < 3.
Rational zograf_a(int n);

/// Exact equality of (2 p)^{n-3} a_n / (n-3)! with the constant term of
/// V_{0,n}, an independent witness for the cusped genus-0 volumes.
CheckResult check_zograf(int n, VolumeCache& cache);

}  // namespace wpvol

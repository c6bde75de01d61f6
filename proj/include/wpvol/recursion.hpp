#pragma once

#include <map>
#include <mutex>
#include <utility>

#include "wpvol/polynomial.hpp"

namespace wpvol {

/// Enumeration order for the assembled recursion terms. The result is
/// independent of the order; the reversed mode exists so tests can assert
/// exactly that.
enum class TermOrder { forward, reversed };

/// Memo table of computed volume polynomials, keyed by (g, n). Reads and
/// insertions are serialized by an internal mutex; entries are validated
/// against the volume invariants before they are stored.
class VolumeCache {
public:
    VolumeCache() = default;
    VolumeCache(const VolumeCache&) = delete;
    VolumeCache& operator=(const VolumeCache&) = delete;

    /// V_{g,n} for any stable (g, n): n >= 1 goes through the recursion,
    /// n = 0 (g >= 2) through the closed-surface formula.
    const VolumePolynomial& volume(int g, int n);

    bool contains(int g, int n) const;
    void insert(const VolumePolynomial& v);
    std::vector<std::pair<int, int>> keys() const;

private:
    friend VolumePolynomial compute_volume(int g, int n, VolumeCache& cache);

    const VolumePolynomial* find(int g, int n) const;
    const VolumePolynomial& store(VolumePolynomial v);

    mutable std::mutex mutex_;
    std::map<std::pair<int, int>, VolumePolynomial> table_;
};

/// True when 2 - 2g - n < 0, i.e. the moduli space is nonempty and
/// finite-dimensional.
bool stable(int g, int n);

/// Right hand side of the volume recursion for V_{g,n}: an even polynomial
/// in L_1 equal to 2 d/dL_1 (L_1 V_{g,n}). Exposed separately so the
/// intermediate assembly can be checked against closed forms.
VolumePolynomial assemble_rhs(int g, int n, VolumeCache& cache,
                              TermOrder order = TermOrder::forward);

/// V_{g,n} for stable (g, n) with n >= 1, by recursion on pants removal with
/// the base cases V_{0,3} = 1 and V_{1,1} = x_1/48 + p/12. For n = 0 use
/// closed_volume instead. Every result is validated (homogeneity, symmetry,
/// nonnegativity) and memoized in the cache.
VolumePolynomial compute_volume(int g, int n, VolumeCache& cache);

}  // namespace wpvol

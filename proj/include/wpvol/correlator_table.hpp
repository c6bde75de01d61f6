#pragma once

#include <map>
#include <vector>

#include "wpvol/check_report.hpp"
#include "wpvol/intersections.hpp"

namespace wpvol {

/// Table of top psi intersection numbers <tau_{a_1} ... tau_{a_n}>, keyed by
/// the sorted exponent tuple. An entry exists for every tuple whose level
/// |a| = 3g-3+n is at most max_level and whose implied genus is a
/// non-negative integer; all other tuples are either known zeros (bad genus)
/// or outside the budget.
class CorrelatorTable {
public:
    /// Lookup outcome: known exact value, or outside the table's budget.
    struct Entry {
        bool known = false;
        Rational value;
    };

    CorrelatorTable(int max_level, VolumeCache& cache);

    int max_level() const { return max_level_; }
    std::size_t size() const { return values_.size(); }

    /// Value of <tau_alpha> (order-insensitive). Tuples with non-integral or
    /// negative implied genus, or with n = 0, are known zeros.
    Entry lookup(std::vector<int> alpha) const;

private:
    int max_level_;
    std::map<std::vector<int>, Rational> values_;
};

/// String and dilaton equations for every tuple whose left side lies in the
/// table.
CheckList check_correlator_string_dilaton(const CorrelatorTable& table);

/// Exponent multiset of a monomial in the t-variables: index -> multiplicity.
using TMonomial = std::map<int, int>;

/// Coefficient identity of the KdV-form equation
///   (2n+1) F_{t_n t_0 t_0} = F_{t_{n-1} t_0} F_{t_0^3}
///                           + 2 F_{t_{n-1} t_0^2} F_{t_0^2} + 1/4 F_{t_{n-1} t_0^4}
/// at the given monomial. Missing correlators make the check inconclusive.
CheckResult check_kdv_pde(int n, const TMonomial& monomial, const CorrelatorTable& table);

/// Coefficient of the monomial in L_n(exp F) exp(-F), which must vanish.
/// n >= -1; L_0 carries the constant 1/16 = 3/2 * <tau_1>.
CheckResult check_virasoro(int n, const TMonomial& monomial, const CorrelatorTable& table);

/// All KdV / Virasoro coefficient identities checkable at the table's level;
/// used by the verification suites.
CheckList check_kdv_all(const CorrelatorTable& table);
CheckList check_virasoro_all(const CorrelatorTable& table, int max_n = 2);

}  // namespace wpvol

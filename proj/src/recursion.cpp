#include "wpvol/recursion.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "wpvol/kernels.hpp"

namespace wpvol {

bool stable(int g, int n) { return 2 - 2 * g - n < 0; }

const VolumePolynomial* VolumeCache::find(int g, int n) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = table_.find({g, n});
    return it == table_.end() ? nullptr : &it->second;
}

const VolumePolynomial& VolumeCache::store(VolumePolynomial v) {
    v.assert_volume_invariants();
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = table_.emplace(std::make_pair(v.genus(), v.boundaries()), std::move(v));
    return it->second;
}

bool VolumeCache::contains(int g, int n) const { return find(g, n) != nullptr; }

void VolumeCache::insert(const VolumePolynomial& v) {
    if (!stable(v.genus(), v.boundaries()) && v.boundaries() != 0) {
        throw std::domain_error("VolumeCache: unstable (g, n)");
    }
    store(v);
}

std::vector<std::pair<int, int>> VolumeCache::keys() const {
    std::lock_guard<std::mutex> lock(mutex_);
    std::vector<std::pair<int, int>> out;
    out.reserve(table_.size());
    for (const auto& [key, value] : table_) {
        out.push_back(key);
    }
    return out;
}

const VolumePolynomial& VolumeCache::volume(int g, int n) {
    if (n == 0) {
        if (g < 2) {
            throw std::domain_error("volume: closed surfaces need g >= 2");
        }
        if (const auto* hit = find(g, 0)) {
            return *hit;
        }
        // V_{g,0} = V'_{g,1}(2 pi i) / (2 pi i (2g-2)), restated over Q[p]
        // as 2 (dV_{g,1}/dx_1)|_{x_1 = -4p} / (2g-2).
        const VolumePolynomial& v1 = volume(g, 1);
        VolumePolynomial closed =
            v1.derivative_x(1).substitute_two_pi_i(1) * Rational(2, 2 * g - 2);
        return store(std::move(closed));
    }
    if (!stable(g, n)) {
        throw std::domain_error("volume: unstable (g, n) = (" + std::to_string(g) + ", " +
                                std::to_string(n) + ")");
    }
    if (const auto* hit = find(g, n)) {
        return *hit;
    }
    return store(compute_volume(g, n, *this));
}

namespace {

/// Adds factor * p^{p_shift} * x^{x_shift} * f into accumulator.
void accumulate(VolumePolynomial& acc, const VolumePolynomial& f, const Rational& factor,
                int p_shift, const std::vector<int>& x_shift) {
    for (const auto& [m, c] : f.terms()) {
        Monomial shifted{m.p + p_shift, m.x};
        for (size_t i = 0; i < x_shift.size(); ++i) {
            shifted.x[i] += x_shift[i];
        }
        acc.add_term(shifted, c * factor);
    }
}

std::vector<int> subsets_order(int count, TermOrder order) {
    std::vector<int> masks(count);
    std::iota(masks.begin(), masks.end(), 0);
    if (order == TermOrder::reversed) {
        std::reverse(masks.begin(), masks.end());
    }
    return masks;
}

}  // namespace

VolumePolynomial assemble_rhs(int g, int n, VolumeCache& cache, TermOrder order) {
    VolumePolynomial rhs(g, n);

    // Pants with two interior boundary curves, non-separating complement:
    // child V_{g-1, n+1}(x, y, L_2, ..., L_n).
    if (g >= 1 && stable(g - 1, n + 1)) {
        const VolumePolynomial child = cache.volume(g - 1, n + 1);
        for (const auto& [m, c] : child.terms()) {
            std::vector<int> x_shift(n, 0);
            for (int j = 2; j < n + 1; ++j) {
                x_shift[j - 1] = m.x[j];  // child label j+1 carries parent label j
            }
            accumulate(rhs, transform_double(m.x[0], m.x[1], n), c, m.p, x_shift);
        }
    }

    // Pants with two interior boundary curves, separating complement:
    // ordered pairs (g_1, I), (g_2, J) with I ⊔ J = {2, ..., n}. The
    // conventions V_{0,1} = V_{0,2} = 0 drop the degenerate pairs.
    const int free_labels = n - 1;
    std::vector<int> genus_order(g + 1);
    std::iota(genus_order.begin(), genus_order.end(), 0);
    if (order == TermOrder::reversed) {
        std::reverse(genus_order.begin(), genus_order.end());
    }
    for (int g1 : genus_order) {
        const int g2 = g - g1;
        for (int mask : subsets_order(1 << free_labels, order)) {
            std::vector<int> labels_i, labels_j;
            for (int b = 0; b < free_labels; ++b) {
                ((mask >> b) & 1 ? labels_i : labels_j).push_back(b + 2);
            }
            if (!stable(g1, static_cast<int>(labels_i.size()) + 1) ||
                !stable(g2, static_cast<int>(labels_j.size()) + 1)) {
                continue;
            }
            const VolumePolynomial first = cache.volume(g1, labels_i.size() + 1);
            const VolumePolynomial second = cache.volume(g2, labels_j.size() + 1);
            for (const auto& [ma, ca] : first.terms()) {
                for (const auto& [mb, cb] : second.terms()) {
                    std::vector<int> x_shift(n, 0);
                    for (size_t t = 0; t < labels_i.size(); ++t) {
                        x_shift[labels_i[t] - 1] = ma.x[t + 1];
                    }
                    for (size_t t = 0; t < labels_j.size(); ++t) {
                        x_shift[labels_j[t] - 1] = mb.x[t + 1];
                    }
                    accumulate(rhs, transform_double(ma.x[0], mb.x[0], n), ca * cb,
                               ma.p + mb.p, x_shift);
                }
            }
        }
    }

    // Pants containing the distinguished boundary and one other boundary:
    // child V_{g, n-1}(x, L_2, ..., Lhat_k, ..., L_n).
    std::vector<int> boundary_order;
    for (int k = 2; k <= n; ++k) {
        boundary_order.push_back(k);
    }
    if (order == TermOrder::reversed) {
        std::reverse(boundary_order.begin(), boundary_order.end());
    }
    for (int k : boundary_order) {
        if (!stable(g, n - 1)) {
            continue;
        }
        const VolumePolynomial child = cache.volume(g, n - 1);
        std::vector<int> parent_label;  // child variable j + 2 -> parent_label[j]
        for (int j = 2; j <= n; ++j) {
            if (j != k) {
                parent_label.push_back(j);
            }
        }
        for (const auto& [m, c] : child.terms()) {
            std::vector<int> x_shift(n, 0);
            for (size_t t = 0; t + 1 < m.x.size(); ++t) {
                x_shift[parent_label[t] - 1] = m.x[t + 1];
            }
            accumulate(rhs, transform_boundary(m.x[0], k, n), c, m.p, x_shift);
        }
    }

    return rhs;
}

VolumePolynomial compute_volume(int g, int n, VolumeCache& cache) {
    if (n == 0) {
        throw std::domain_error("compute_volume: n = 0 is handled by closed_volume");
    }
    if (!stable(g, n)) {
        throw std::domain_error("compute_volume: unstable (g, n)");
    }
    if (const auto* hit = cache.find(g, n)) {
        return *hit;
    }

    VolumePolynomial result(g, n);
    if (g == 0 && n == 3) {
        result = VolumePolynomial::constant(0, 3, Rational(1));
    } else if (g == 1 && n == 1) {
        result.add_term(Monomial{0, {1}}, Rational(1, 48));
        result.add_term(Monomial{1, {0}}, Rational(1, 12));
    } else {
        const VolumePolynomial rhs = assemble_rhs(g, n, cache);
        // rhs = 2 d/dL_1 (L_1 V): integrate from 0 and divide by 2 L_1,
        // i.e. x_1^a picks up the factor 1 / (2 (2a+1)).
        for (const auto& [m, c] : rhs.terms()) {
            result.add_term(m, c / Rational(2 * (2 * m.x[0] + 1)));
        }
    }

    result.assert_volume_invariants();
    cache.store(result);
    return result;
}

}  // namespace wpvol

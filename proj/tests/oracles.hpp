/* Test-only oracles, kept independent of the implementation paths they
 * cross-check. */
#pragma once

#include <optional>
#include <vector>

#include "dp1/plane_curve.hpp"

namespace dp1::oracles {

// Milnor number of a quasi-homogeneous plane germ via the product
// formula mu = (d - w_u)(d - w_v) / (w_u w_v); nullopt if no small
// integer weight system makes the support equidegree.
inline std::optional<long long> quasihomogeneous_milnor(const PlanePoly& f) {
    for (int wu = 1; wu <= 24; ++wu) {
        for (int wv = 1; wv <= 24; ++wv) {
            long long d = -1;
            bool ok = true;
            for (const auto& [k, c] : f.terms()) {
                long long deg = static_cast<long long>(wu) * k.first +
                                static_cast<long long>(wv) * k.second;
                if (d < 0) {
                    d = deg;
                } else if (d != deg) {
                    ok = false;
                    break;
                }
            }
            if (!ok || d <= 0) continue;
            long long num = (d - wu) * (d - wv);
            if (num % (static_cast<long long>(wu) * wv) != 0) continue;
            return num / (static_cast<long long>(wu) * wv);
        }
    }
    return std::nullopt;
}

// determinant by cofactor expansion (exponential; for tiny matrices)
inline long long cofactor_determinant(const std::vector<std::vector<long long>>& m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    long long acc = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        std::vector<std::vector<long long>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<long long> row;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != c) row.push_back(m[i][j]);
            }
            minor.push_back(std::move(row));
        }
        long long term = m[0][c] * cofactor_determinant(minor);
        acc += (c % 2 == 0) ? term : -term;
    }
    return acc;
}

}  // namespace dp1::oracles

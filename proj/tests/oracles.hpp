#pragma once

// Test-only oracles, independent of the elimination code they check: rank by
// exhaustive minor expansion, determinants by cofactor recursion.

#include <cstddef>
#include <vector>

#include "terracini/matrix.hpp"
#include "terracini/rational.hpp"

namespace oracles {

inline terracini::Rational cofactor_det(const std::vector<std::vector<terracini::Rational>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    terracini::Rational acc(0);
    for (std::size_t k = 0; k < n; ++k) {
        if (m[0][k] == 0) continue;
        std::vector<std::vector<terracini::Rational>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<terracini::Rational> row;
            row.reserve(n - 1);
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) row.push_back(m[i][j]);
            minor.push_back(std::move(row));
        }
        terracini::Rational term = m[0][k] * cofactor_det(minor);
        if (k % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

// Largest k with a nonzero k x k minor, checking every row/column subset.
inline std::size_t minor_rank(const terracini::Mat& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    const std::size_t max_k = rows < cols ? rows : cols;

    auto subsets = [](std::size_t total, std::size_t k) {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> pick(k);
        for (std::size_t i = 0; i < k; ++i) pick[i] = i;
        for (;;) {
            out.push_back(pick);
            std::size_t i = k;
            bool advanced = false;
            while (i-- > 0) {
                if (pick[i] != i + total - k) {
                    ++pick[i];
                    for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) return out;
        }
    };

    for (std::size_t k = max_k; k >= 1; --k) {
        for (const auto& rsel : subsets(rows, k)) {
            for (const auto& csel : subsets(cols, k)) {
                std::vector<std::vector<terracini::Rational>> sub(
                    k, std::vector<terracini::Rational>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub[i][j] = m.at(rsel[i], csel[j]);
                if (cofactor_det(sub) != 0) return k;
            }
        }
    }
    return 0;
}

} // namespace oracles

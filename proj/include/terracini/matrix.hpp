#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "terracini/rational.hpp"

namespace terracini {

/// Dense matrix of exact rationals, row-major, immutable after construction.
class Mat {
public:
    Mat() = default;

    Mat(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_)
            throw std::invalid_argument("Mat: entry count does not match shape");
    }

    /// Builds from a row list; `cols` disambiguates the zero-row case.
    static Mat from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
        std::vector<Rational> entries;
        entries.reserve(rows.size() * cols);
        for (const auto& row : rows) {
            if (row.size() != cols)
                throw std::invalid_argument("Mat: ragged row");
            entries.insert(entries.end(), row.begin(), row.end());
        }
        return Mat(rows.size(), cols, std::move(entries));
    }

    static Mat from_rows(const std::vector<std::vector<Rational>>& rows) {
        if (rows.empty())
            throw std::invalid_argument("Mat: cols unknown for empty row list");
        return from_rows(rows, rows.front().size());
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& at(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    const std::vector<Rational>& entries() const { return entries_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

} // namespace terracini

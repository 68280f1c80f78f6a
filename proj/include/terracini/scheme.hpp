#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "terracini/rational.hpp"

namespace terracini {

/// Point of P^n with exact homogeneous coordinates, normalized so the first
/// nonzero coordinate is 1 (canonical representative: equality and hashing
/// are plain coordinate comparison).
class ProjPoint {
public:
    explicit ProjPoint(std::vector<Rational> coords);

    const std::vector<Rational>& coords() const { return coords_; }
    std::size_t dim() const { return coords_.size() - 1; } // ambient n

    bool operator==(const ProjPoint& other) const { return coords_ == other.coords_; }
    bool operator!=(const ProjPoint& other) const { return !(*this == other); }

    std::string to_string() const;

private:
    std::vector<Rational> coords_;
};

enum class PointKind { reduced, double_point };

struct SchemeItem {
    ProjPoint point;
    PointKind kind;

    bool operator==(const SchemeItem&) const = default;
};

/// Zero-dimensional scheme Z = S' u 2S'': reduced and double points with
/// pairwise distinct supports. length = #reduced + (n+1) * #double.
class SchemeSpec {
public:
    SchemeSpec(int n, std::vector<SchemeItem> items);

    int n() const { return n_; }
    const std::vector<SchemeItem>& items() const { return items_; }
    std::size_t length() const;

    /// All points doubled: the scheme 2S.
    static SchemeSpec doubled(int n, const std::vector<ProjPoint>& points);
    /// All points reduced: the scheme S.
    static SchemeSpec reduced(int n, const std::vector<ProjPoint>& points);
    /// S u 2p: point at `double_index` doubled, the rest reduced
    /// (length r + n).
    static SchemeSpec with_one_doubled(int n, const std::vector<ProjPoint>& points,
                                       std::size_t double_index);

private:
    int n_;
    std::vector<SchemeItem> items_;
};

/// Applies an invertible (n+1)x(n+1) change of coordinates (given row-major)
/// to a point; used by the projective-invariance checks and generators.
ProjPoint apply_transform(const std::vector<std::vector<Rational>>& g, const ProjPoint& p);

} // namespace terracini

#pragma once

#include <string>
#include <vector>

#include "terracini/scheme.hpp"
#include "terracini/segre.hpp"

namespace terracini {

/// Point-set document: ambient n plus points with optional per-point kind
/// (default reduced). Serialized as JSON with coordinates as exact rational
/// strings; round-trips bit for bit.
struct PointSetFile {
    int n = 0;
    std::vector<SchemeItem> items;

    std::vector<ProjPoint> points() const;

    bool operator==(const PointSetFile&) const = default;
};

std::string write_point_set(const PointSetFile& file);
PointSetFile parse_point_set(const std::string& text);

PointSetFile load_point_set(const std::string& path);
void save_point_set(const std::string& path, const PointSetFile& file);

/// Point-tuple document for products of projective spaces: the point-set
/// format with factor grouping.
struct SegreTupleFile {
    std::vector<int> factor_dims;
    std::vector<SegrePoint> points;

    bool operator==(const SegreTupleFile&) const = default;
};

std::string write_segre_tuples(const SegreTupleFile& file);
SegreTupleFile parse_segre_tuples(const std::string& text);
SegreTupleFile load_segre_tuples(const std::string& path);

} // namespace terracini

#include "terracini/scheme.hpp"

#include "terracini/errors.hpp"

namespace terracini {

ProjPoint::ProjPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
    std::size_t lead = coords_.size();
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] != 0) {
            lead = i;
            break;
        }
    }
    if (coords_.empty() || lead == coords_.size())
        throw zero_point_error("projective point with all coordinates zero");
    const Rational inv = 1 / coords_[lead];
    for (auto& c : coords_) c *= inv;
}

std::string ProjPoint::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += " : ";
        out += rational_to_string(coords_[i]);
    }
    return out + ")";
}

SchemeSpec::SchemeSpec(int n, std::vector<SchemeItem> items)
    : n_(n), items_(std::move(items)) {
    for (const auto& item : items_) {
        if (item.point.dim() != static_cast<std::size_t>(n_))
            throw error("scheme point has wrong ambient dimension");
    }
    for (std::size_t i = 0; i < items_.size(); ++i)
        for (std::size_t j = i + 1; j < items_.size(); ++j)
            if (items_[i].point == items_[j].point)
                throw duplicate_point_error("duplicate projective point " +
                                            items_[i].point.to_string());
}

std::size_t SchemeSpec::length() const {
    std::size_t len = 0;
    for (const auto& item : items_)
        len += item.kind == PointKind::reduced ? 1 : static_cast<std::size_t>(n_) + 1;
    return len;
}

SchemeSpec SchemeSpec::doubled(int n, const std::vector<ProjPoint>& points) {
    std::vector<SchemeItem> items;
    items.reserve(points.size());
    for (const auto& p : points) items.push_back({p, PointKind::double_point});
    return SchemeSpec(n, std::move(items));
}

SchemeSpec SchemeSpec::reduced(int n, const std::vector<ProjPoint>& points) {
    std::vector<SchemeItem> items;
    items.reserve(points.size());
    for (const auto& p : points) items.push_back({p, PointKind::reduced});
    return SchemeSpec(n, std::move(items));
}

SchemeSpec SchemeSpec::with_one_doubled(int n, const std::vector<ProjPoint>& points,
                                        std::size_t double_index) {
    std::vector<SchemeItem> items;
    items.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        items.push_back({points[i], i == double_index ? PointKind::double_point
                                                      : PointKind::reduced});
    return SchemeSpec(n, std::move(items));
}

ProjPoint apply_transform(const std::vector<std::vector<Rational>>& g, const ProjPoint& p) {
    const auto& c = p.coords();
    std::vector<Rational> out(c.size(), Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j) out[i] += g[i][j] * c[j];
    return ProjPoint(std::move(out));
}

} // namespace terracini

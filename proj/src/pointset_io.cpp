#include "terracini/pointset_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "terracini/errors.hpp"

namespace terracini {

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

json point_to_json(const ProjPoint& p) {
    json coords = json::array();
    for (const auto& c : p.coords()) coords.push_back(rational_to_string(c));
    return coords;
}

ProjPoint point_from_json(const json& coords, int n) {
    if (!coords.is_array() || coords.size() != static_cast<std::size_t>(n) + 1)
        throw parse_error("point-set: expected " + std::to_string(n + 1) +
                          " coordinates per point");
    std::vector<Rational> out;
    out.reserve(coords.size());
    for (const auto& c : coords) {
        if (!c.is_string()) throw parse_error("point-set: coordinates must be strings");
        out.push_back(parse_rational(c.get<std::string>()));
    }
    return ProjPoint(std::move(out));
}

json parse_document(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw parse_error("point-set: invalid JSON");
    if (!doc.is_object()) throw parse_error("point-set: top level must be an object");
    if (doc.value("schema_version", 0) != kSchemaVersion)
        throw parse_error("point-set: unsupported schema_version");
    return doc;
}

} // namespace

std::vector<ProjPoint> PointSetFile::points() const {
    std::vector<ProjPoint> out;
    out.reserve(items.size());
    for (const auto& item : items) out.push_back(item.point);
    return out;
}

std::string write_point_set(const PointSetFile& file) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["n"] = file.n;
    json points = json::array();
    for (const auto& item : file.items) {
        json entry;
        entry["coords"] = point_to_json(item.point);
        entry["kind"] = item.kind == PointKind::reduced ? "reduced" : "double";
        points.push_back(std::move(entry));
    }
    doc["points"] = std::move(points);
    return doc.dump(2) + "\n";
}

PointSetFile parse_point_set(const std::string& text) {
    const json doc = parse_document(text);
    PointSetFile out;
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw parse_error("point-set: missing integer field 'n'");
    out.n = doc["n"].get<int>();
    if (out.n < 1) throw parse_error("point-set: n must be >= 1");
    if (!doc.contains("points") || !doc["points"].is_array())
        throw parse_error("point-set: missing array field 'points'");
    for (const auto& entry : doc["points"]) {
        if (!entry.is_object() || !entry.contains("coords"))
            throw parse_error("point-set: each point needs a 'coords' array");
        const std::string kind = entry.value("kind", "reduced");
        if (kind != "reduced" && kind != "double")
            throw parse_error("point-set: kind must be 'reduced' or 'double'");
        out.items.push_back({point_from_json(entry["coords"], out.n),
                             kind == "reduced" ? PointKind::reduced
                                               : PointKind::double_point});
    }
    return out;
}

PointSetFile load_point_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open point-set file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_point_set(buf.str());
}

void save_point_set(const std::string& path, const PointSetFile& file) {
    std::ofstream out(path);
    if (!out) throw error("cannot write point-set file: " + path);
    out << write_point_set(file);
}

std::string write_segre_tuples(const SegreTupleFile& file) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["factor_dims"] = file.factor_dims;
    json points = json::array();
    for (const auto& p : file.points) {
        json factors = json::array();
        for (const auto& f : p.factors) factors.push_back(point_to_json(f));
        points.push_back(json{{"factors", std::move(factors)}});
    }
    doc["points"] = std::move(points);
    return doc.dump(2) + "\n";
}

SegreTupleFile parse_segre_tuples(const std::string& text) {
    const json doc = parse_document(text);
    SegreTupleFile out;
    if (!doc.contains("factor_dims") || !doc["factor_dims"].is_array())
        throw parse_error("point-tuples: missing array field 'factor_dims'");
    for (const auto& d : doc["factor_dims"]) {
        if (!d.is_number_integer() || d.get<int>() < 1)
            throw parse_error("point-tuples: factor dimensions must be positive integers");
        out.factor_dims.push_back(d.get<int>());
    }
    if (out.factor_dims.empty()) throw parse_error("point-tuples: no factors");
    if (!doc.contains("points") || !doc["points"].is_array())
        throw parse_error("point-tuples: missing array field 'points'");
    for (const auto& entry : doc["points"]) {
        if (!entry.is_object() || !entry.contains("factors") || !entry["factors"].is_array() ||
            entry["factors"].size() != out.factor_dims.size())
            throw parse_error("point-tuples: each point needs one factor per space");
        SegrePoint p;
        for (std::size_t i = 0; i < out.factor_dims.size(); ++i)
            p.factors.push_back(point_from_json(entry["factors"][i], out.factor_dims[i]));
        out.points.push_back(std::move(p));
    }
    return out;
}

SegreTupleFile load_segre_tuples(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open point-tuple file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_segre_tuples(buf.str());
}

} // namespace terracini

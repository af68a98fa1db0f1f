#include "habit/geojson.hpp"

namespace habit::geojson {

using nlohmann::json;

namespace {

json gap_properties(const Gap& gap) {
    return {{"vessel_id", gap.vessel_id},
            {"trip_id", gap.trip_id},
            {"start_ts", format_timestamp(*gap.start.ts)},
            {"end_ts", format_timestamp(*gap.end.ts)}};
}

}  // namespace

json feature_collection(json features) {
    return {{"type", "FeatureCollection"}, {"features", std::move(features)}};
}

json imputed_feature(const Gap& gap, const ImputedPath& path) {
    json coords = json::array();
    json times = json::array();
    for (const auto& p : path.points) {
        coords.push_back({p.lon, p.lat});
        times.push_back(p.ts ? json(format_timestamp(*p.ts)) : json(nullptr));
    }
    json props = gap_properties(gap);
    props["method"] = to_string(path.method);
    props["fallback_used"] = path.fallback_used;
    props["timestamps"] = times;
    json cells = json::array();
    for (const auto c : path.cell_path) cells.push_back(h3::to_string(c));
    props["cell_path"] = cells;
    return {{"type", "Feature"},
            {"geometry", {{"type", "LineString"}, {"coordinates", coords}}},
            {"properties", props}};
}

json error_feature(const Gap& gap, const std::string& message) {
    json props = {{"vessel_id", gap.vessel_id}, {"trip_id", gap.trip_id}, {"error", message}};
    return {{"type", "Feature"}, {"geometry", nullptr}, {"properties", props}};
}

json graph_cells(const TrafficGraph& g) {
    json features = json::array();
    for (std::uint32_t i = 0; i < g.node_count(); ++i) {
        const CellId c = g.cell(i);
        json ring = json::array();
        const auto boundary = h3::cell_to_boundary(c);
        for (const auto& v : boundary) ring.push_back({v.lng, v.lat});
        ring.push_back(ring.front());
        const auto& a = g.attrs(i);
        json props = {{"cell", h3::to_string(c)},
                      {"msg_count", a.msg_count},
                      {"distinct_vessels", a.distinct_vessels},
                      {"median_lon", a.median_lon},
                      {"median_lat", a.median_lat}};
        features.push_back({{"type", "Feature"},
                            {"geometry", {{"type", "Polygon"}, {"coordinates", json::array({ring})}}},
                            {"properties", props}});
    }
    return feature_collection(std::move(features));
}

}  // namespace habit::geojson

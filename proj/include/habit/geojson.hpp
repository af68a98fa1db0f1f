#pragma once

#include <string>
#include <vector>

#include "habit/imputer.hpp"
#include "habit/traffic_graph.hpp"
#include "json.hpp"

namespace habit::geojson {

nlohmann::json feature_collection(nlohmann::json features);

// LineString with per-point timestamps and method/fallback properties.
nlohmann::json imputed_feature(const Gap& gap, const ImputedPath& path);

// Feature with null geometry carrying an "error" property.
nlohmann::json error_feature(const Gap& gap, const std::string& message);

// One closed polygon per node (H3 boundary), with density properties.
nlohmann::json graph_cells(const TrafficGraph& g);

}  // namespace habit::geojson

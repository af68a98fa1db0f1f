#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "habit/geo.hpp"
#include "habit/traffic_graph.hpp"

namespace habit {

enum class Projection { Center, Median };  // p = c, p = w
enum class CostMode { Hops, InverseFrequency };
enum class Fallback { Error, StraightLine };

std::optional<Projection> parse_projection(std::string_view s);  // "c" | "w"
std::optional<CostMode> parse_cost_mode(std::string_view s);     // "hops" | "inverse-frequency"
std::optional<Fallback> parse_fallback(std::string_view s);      // "error" | "straight-line"
std::string_view to_string(Projection p);
std::string_view to_string(CostMode m);
std::string_view to_string(Fallback f);

struct ImputeConfig {
    Projection projection = Projection::Median;
    double tolerance_m = 250.0;
    CostMode cost_mode = CostMode::Hops;
    int k_max = 16;
    Fallback fallback = Fallback::StraightLine;
    double sli_spacing_m = 250.0;

    void validate() const;
};

struct Gap {
    GeoPoint start;  // ts required
    GeoPoint end;
    std::string vessel_id;
    std::string trip_id;
};

struct ImputedPath {
    enum class Method { Habit, Sli };
    std::vector<GeoPoint> points;
    std::vector<CellId> cell_path;
    Method method = Method::Habit;
    bool fallback_used = false;
};

std::string_view to_string(ImputedPath::Method m);

class OffNetworkError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnreachableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

CellId map_endpoint(const TrafficGraph& g, const GeoPoint& pt, const ImputeConfig& cfg);

// Optimal directed cell path. Hops mode: fewest edges, then largest weight
// sum, then lexicographically smallest id sequence. Inverse-frequency mode:
// smallest sum of 1/weight with the same tie-breaks.
std::vector<CellId> find_cell_path(const TrafficGraph& g, CellId start, CellId goal, CostMode mode);

// Cost of a cell path under `mode`; throws if a step is not an edge.
double path_cost(const TrafficGraph& g, const std::vector<CellId>& path, CostMode mode);

std::vector<GeoPoint> project_path(const TrafficGraph& g, const std::vector<CellId>& cells, Projection p);

// Ramer-Douglas-Peucker on the sphere; a point is kept when its distance to
// the current chord exceeds t.
std::vector<GeoPoint> simplify_rdp(const std::vector<GeoPoint>& points, double t);

ImputedPath impute_sli(const Gap& gap, double max_spacing_m);

ImputedPath impute_gap(const TrafficGraph& g, const Gap& gap, const ImputeConfig& cfg);

}  // namespace habit

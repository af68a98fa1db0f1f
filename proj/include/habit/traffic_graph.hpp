#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "habit/h3_aggregator.hpp"

namespace habit {

struct NodeAttrs {
    double median_lon = 0.0;
    double median_lat = 0.0;
    std::uint64_t msg_count = 0;
    std::uint64_t distinct_vessels = 0;
    std::optional<double> median_sog;
    std::optional<double> median_cog;
    friend bool operator==(const NodeAttrs&, const NodeAttrs&) = default;
};

struct EdgeAttrs {
    std::uint32_t weight = 0;
    std::uint32_t grid_dist = 0;
    friend bool operator==(const EdgeAttrs&, const EdgeAttrs&) = default;
};

struct BuildMetadata {
    std::string source;
    std::uint64_t record_count = 0;
    std::uint64_t trip_count = 0;
    std::int64_t build_timestamp_ms = 0;
    friend bool operator==(const BuildMetadata&, const BuildMetadata&) = default;
};

struct Edge {
    std::uint32_t from = 0;  // node index
    std::uint32_t to = 0;
    EdgeAttrs attrs;
    friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphBuildError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class GraphFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Immutable after construction. Nodes are sorted by cell id; edges are sorted
// by (from, to) and indexed per source node.
class TrafficGraph {
public:
    static constexpr std::uint32_t kNoNode = 0xffffffffu;

    TrafficGraph() = default;
    TrafficGraph(int resolution, std::vector<CellId> cells, std::vector<NodeAttrs> attrs, std::vector<Edge> edges,
                 BuildMetadata meta);

    int resolution() const { return resolution_; }
    std::size_t node_count() const { return cells_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool empty() const { return cells_.empty(); }

    const std::vector<CellId>& cells() const { return cells_; }
    CellId cell(std::uint32_t idx) const { return cells_[idx]; }
    const NodeAttrs& attrs(std::uint32_t idx) const { return attrs_[idx]; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const Edge> out_edges(std::uint32_t idx) const;

    std::uint32_t index_of(CellId c) const;
    bool contains(CellId c) const { return index_of(c) != kNoNode; }
    const NodeAttrs* node(CellId c) const;
    std::optional<EdgeAttrs> edge(CellId from, CellId to) const;

    std::uint32_t max_grid_dist() const { return max_grid_dist_; }
    const BuildMetadata& metadata() const { return meta_; }

    friend bool operator==(const TrafficGraph& a, const TrafficGraph& b);

private:
    int resolution_ = 0;
    std::vector<CellId> cells_;
    std::vector<NodeAttrs> attrs_;
    std::vector<Edge> edges_;
    std::vector<std::uint32_t> offsets_{0};
    std::uint32_t max_grid_dist_ = 0;
    BuildMetadata meta_;
};

// Nodes are the cells referenced by at least one transition.
TrafficGraph build_graph(const CellStatsMap& cells, const TransitionMap& transitions, int r,
                         BuildMetadata meta = {});

std::vector<std::uint8_t> serialize_graph(const TrafficGraph& g);
TrafficGraph deserialize_graph(std::span<const std::uint8_t> bytes);
void save_graph(const TrafficGraph& g, const std::filesystem::path& path);
TrafficGraph load_graph(const std::filesystem::path& path);

// Writes <dir>/nodes.csv and <dir>/edges.csv.
void export_graph_csv(const TrafficGraph& g, const std::filesystem::path& dir);

// Node closest to `cell` within k_max rings, or nullopt.
std::optional<CellId> nearest_node(const TrafficGraph& g, CellId cell, int k_max = 16);

// Throws std::invalid_argument on cross-resolution input.
std::uint32_t grid_distance(CellId a, CellId b);

}  // namespace habit

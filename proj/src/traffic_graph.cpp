#include "habit/traffic_graph.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <tuple>
#include <unordered_set>

#include "habit/geo.hpp"
#include "habit/util.hpp"
#include "json.hpp"

namespace habit {

static_assert(std::endian::native == std::endian::little, "graph I/O assumes a little-endian host");

TrafficGraph::TrafficGraph(int resolution, std::vector<CellId> cells, std::vector<NodeAttrs> attrs,
                           std::vector<Edge> edges, BuildMetadata meta)
    : resolution_(resolution),
      cells_(std::move(cells)),
      attrs_(std::move(attrs)),
      edges_(std::move(edges)),
      meta_(std::move(meta)) {
    if (cells_.size() != attrs_.size()) throw GraphBuildError("node/attribute count mismatch");
    if (!std::is_sorted(cells_.begin(), cells_.end()) ||
        std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end()) {
        throw GraphBuildError("node cells must be unique and sorted");
    }
    for (const auto c : cells_) {
        if (!h3::is_valid_cell(c) || h3::resolution(c) != resolution_) {
            throw GraphBuildError(fmt::format("node {} is not a valid cell at resolution {}", h3::to_string(c),
                                              resolution_));
        }
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
    offsets_.assign(cells_.size() + 1, 0);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.from >= cells_.size() || e.to >= cells_.size()) throw GraphBuildError("edge endpoint out of range");
        if (e.from == e.to) throw GraphBuildError(fmt::format("self-loop at {}", h3::to_string(cells_[e.from])));
        if (i > 0 && edges_[i - 1].from == e.from && edges_[i - 1].to == e.to) {
            throw GraphBuildError("duplicate edge");
        }
        if (e.attrs.weight < 1 || e.attrs.grid_dist < 1) throw GraphBuildError("edge weight and grid_dist must be >= 1");
        ++offsets_[e.from + 1];
        max_grid_dist_ = std::max(max_grid_dist_, e.attrs.grid_dist);
    }
    for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
}

std::span<const Edge> TrafficGraph::out_edges(std::uint32_t idx) const {
    return {edges_.data() + offsets_[idx], offsets_[idx + 1] - offsets_[idx]};
}

std::uint32_t TrafficGraph::index_of(CellId c) const {
    const auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
    if (it == cells_.end() || *it != c) return kNoNode;
    return static_cast<std::uint32_t>(it - cells_.begin());
}

const NodeAttrs* TrafficGraph::node(CellId c) const {
    const auto i = index_of(c);
    return i == kNoNode ? nullptr : &attrs_[i];
}

std::optional<EdgeAttrs> TrafficGraph::edge(CellId from, CellId to) const {
    const auto a = index_of(from);
    const auto b = index_of(to);
    if (a == kNoNode || b == kNoNode) return std::nullopt;
    for (const auto& e : out_edges(a)) {
        if (e.to == b) return e.attrs;
    }
    return std::nullopt;
}

bool operator==(const TrafficGraph& a, const TrafficGraph& b) {
    return a.resolution_ == b.resolution_ && a.cells_ == b.cells_ && a.attrs_ == b.attrs_ && a.edges_ == b.edges_ &&
           a.meta_ == b.meta_;
}

TrafficGraph build_graph(const CellStatsMap& cells, const TransitionMap& transitions, int r, BuildMetadata meta) {
    std::vector<CellId> ids;
    ids.reserve(transitions.size() * 2);
    for (const auto& [key, ts] : transitions) {
        for (const CellId c : {key.first, key.second}) {
            if (cells.find(c) == cells.end()) {
                throw GraphBuildError(fmt::format("transition endpoint {} has no cell statistics", h3::to_string(c)));
            }
            ids.push_back(c);
        }
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    std::vector<NodeAttrs> attrs;
    attrs.reserve(ids.size());
    for (const auto c : ids) {
        const CellStats& s = cells.at(c);
        attrs.push_back({s.median_lon, s.median_lat, s.msg_count, s.distinct_vessels, s.median_sog, s.median_cog});
    }

    auto idx = [&](CellId c) {
        return static_cast<std::uint32_t>(std::lower_bound(ids.begin(), ids.end(), c) - ids.begin());
    };
    std::vector<Edge> edges;
    edges.reserve(transitions.size());
    for (const auto& [key, ts] : transitions) {
        if (ts.trip_count > std::numeric_limits<std::uint32_t>::max()) throw GraphBuildError("edge weight overflow");
        edges.push_back({idx(key.first), idx(key.second),
                         {static_cast<std::uint32_t>(ts.trip_count), std::max<std::uint32_t>(1, ts.grid_dist)}});
    }
    return TrafficGraph(r, std::move(ids), std::move(attrs), std::move(edges), std::move(meta));
}

// Byte layout (little-endian):
//   [0,4)    magic "HBTG"
//   [4,6)    u16 version
//   [6,8)    u16 flags (0)
//   [8,16)   i64 build timestamp, ms
//   [16,24)  u64 FNV-1a checksum of bytes [24, end)
//   [24,28)  u32 header length H
//   [28,28+H) JSON header: resolution, node_count, edge_count, metadata
//   node columns, each node_count long:
//     cell u64, median_lon f64, median_lat f64, msg_count u64,
//     distinct_vessels u64, median_sog f64, median_cog f64 (NaN = absent)
//   edge columns, each edge_count long: from u32, to u32, weight u32, grid_dist u32
namespace {

constexpr char kMagic[4] = {'H', 'B', 'T', 'G'};
constexpr std::uint16_t kVersion = 1;
constexpr std::size_t kPreamble = 28;

class Writer {
public:
    template <typename T>
    void put(T v) {
        const auto* p = reinterpret_cast<const std::uint8_t*>(&v);
        buf.insert(buf.end(), p, p + sizeof(T));
    }
    void put_bytes(const void* data, std::size_t n) {
        const auto* p = static_cast<const std::uint8_t*>(data);
        buf.insert(buf.end(), p, p + n);
    }
    std::vector<std::uint8_t> buf;
};

class Reader {
public:
    explicit Reader(std::span<const std::uint8_t> b) : bytes(b) {}
    template <typename T>
    T get() {
        if (pos + sizeof(T) > bytes.size()) throw GraphFormatError("truncated graph file");
        T v;
        std::memcpy(&v, bytes.data() + pos, sizeof(T));
        pos += sizeof(T);
        return v;
    }
    std::span<const std::uint8_t> take(std::size_t n) {
        if (pos + n > bytes.size()) throw GraphFormatError("truncated graph file");
        auto s = bytes.subspan(pos, n);
        pos += n;
        return s;
    }
    std::span<const std::uint8_t> bytes;
    std::size_t pos = 0;
};

double opt_to_f64(const std::optional<double>& v) { return v ? *v : std::numeric_limits<double>::quiet_NaN(); }
std::optional<double> f64_to_opt(double v) { return std::isnan(v) ? std::nullopt : std::optional<double>(v); }

}  // namespace

std::vector<std::uint8_t> serialize_graph(const TrafficGraph& g) {
    const auto& meta = g.metadata();
    const nlohmann::json header = {
        {"resolution", g.resolution()},
        {"node_count", g.node_count()},
        {"edge_count", g.edge_count()},
        {"source", meta.source},
        {"record_count", meta.record_count},
        {"trip_count", meta.trip_count},
    };
    const std::string hdr = header.dump();

    Writer w;
    w.put_bytes(kMagic, 4);
    w.put<std::uint16_t>(kVersion);
    w.put<std::uint16_t>(0);
    w.put<std::int64_t>(meta.build_timestamp_ms);
    w.put<std::uint64_t>(0);
    w.put<std::uint32_t>(static_cast<std::uint32_t>(hdr.size()));
    w.put_bytes(hdr.data(), hdr.size());

    const auto n = static_cast<std::uint32_t>(g.node_count());
    for (std::uint32_t i = 0; i < n; ++i) w.put<std::uint64_t>(g.cell(i));
    for (std::uint32_t i = 0; i < n; ++i) w.put<double>(g.attrs(i).median_lon);
    for (std::uint32_t i = 0; i < n; ++i) w.put<double>(g.attrs(i).median_lat);
    for (std::uint32_t i = 0; i < n; ++i) w.put<std::uint64_t>(g.attrs(i).msg_count);
    for (std::uint32_t i = 0; i < n; ++i) w.put<std::uint64_t>(g.attrs(i).distinct_vessels);
    for (std::uint32_t i = 0; i < n; ++i) w.put<double>(opt_to_f64(g.attrs(i).median_sog));
    for (std::uint32_t i = 0; i < n; ++i) w.put<double>(opt_to_f64(g.attrs(i).median_cog));
    for (const auto& e : g.edges()) w.put<std::uint32_t>(e.from);
    for (const auto& e : g.edges()) w.put<std::uint32_t>(e.to);
    for (const auto& e : g.edges()) w.put<std::uint32_t>(e.attrs.weight);
    for (const auto& e : g.edges()) w.put<std::uint32_t>(e.attrs.grid_dist);

    const std::uint64_t sum = fnv1a64(w.buf.data() + 24, w.buf.size() - 24);
    std::memcpy(w.buf.data() + 16, &sum, sizeof(sum));
    return std::move(w.buf);
}

TrafficGraph deserialize_graph(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < kPreamble || std::memcmp(bytes.data(), kMagic, 4) != 0) {
        throw GraphFormatError("not a graph file (bad magic)");
    }
    Reader r(bytes);
    r.take(4);
    const auto version = r.get<std::uint16_t>();
    if (version != kVersion) throw GraphFormatError(fmt::format("unsupported graph version {}", version));
    r.get<std::uint16_t>();
    BuildMetadata meta;
    meta.build_timestamp_ms = r.get<std::int64_t>();
    const auto checksum = r.get<std::uint64_t>();
    if (checksum != fnv1a64(bytes.data() + 24, bytes.size() - 24)) throw GraphFormatError("checksum mismatch");

    const auto hlen = r.get<std::uint32_t>();
    const auto hbytes = r.take(hlen);
    nlohmann::json header;
    std::size_t n = 0;
    std::size_t m = 0;
    int res = 0;
    try {
        header = nlohmann::json::parse(hbytes.begin(), hbytes.end());
        res = header.at("resolution").get<int>();
        n = header.at("node_count").get<std::size_t>();
        m = header.at("edge_count").get<std::size_t>();
        meta.source = header.at("source").get<std::string>();
        meta.record_count = header.at("record_count").get<std::uint64_t>();
        meta.trip_count = header.at("trip_count").get<std::uint64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw GraphFormatError(fmt::format("bad graph header: {}", e.what()));
    }
    const std::size_t body = n * (7 * 8) + m * (4 * 4);
    if (bytes.size() - r.pos != body) throw GraphFormatError("graph body size does not match header");

    std::vector<CellId> cells(n);
    std::vector<NodeAttrs> attrs(n);
    for (auto& c : cells) c = r.get<std::uint64_t>();
    for (auto& a : attrs) a.median_lon = r.get<double>();
    for (auto& a : attrs) a.median_lat = r.get<double>();
    for (auto& a : attrs) a.msg_count = r.get<std::uint64_t>();
    for (auto& a : attrs) a.distinct_vessels = r.get<std::uint64_t>();
    for (auto& a : attrs) a.median_sog = f64_to_opt(r.get<double>());
    for (auto& a : attrs) a.median_cog = f64_to_opt(r.get<double>());
    std::vector<Edge> edges(m);
    for (auto& e : edges) e.from = r.get<std::uint32_t>();
    for (auto& e : edges) e.to = r.get<std::uint32_t>();
    for (auto& e : edges) e.attrs.weight = r.get<std::uint32_t>();
    for (auto& e : edges) e.attrs.grid_dist = r.get<std::uint32_t>();

    try {
        return TrafficGraph(res, std::move(cells), std::move(attrs), std::move(edges), std::move(meta));
    } catch (const GraphBuildError& e) {
        throw GraphFormatError(fmt::format("graph integrity check failed: {}", e.what()));
    }
}

void save_graph(const TrafficGraph& g, const std::filesystem::path& path) {
    const auto bytes = serialize_graph(g);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error(fmt::format("cannot open {} for writing", path.string()));
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error(fmt::format("write failed: {}", path.string()));
}

TrafficGraph load_graph(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(fmt::format("cannot open {}", path.string()));
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return deserialize_graph(bytes);
}

void export_graph_csv(const TrafficGraph& g, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    std::ofstream nodes(dir / "nodes.csv");
    std::ofstream edges(dir / "edges.csv");
    if (!nodes || !edges) throw std::runtime_error(fmt::format("cannot write CSV export to {}", dir.string()));
    auto opt = [](const std::optional<double>& v) { return v ? fmt::format("{}", *v) : std::string(); };
    nodes << "cell,median_lon,median_lat,msg_count,distinct_vessels,median_sog,median_cog\n";
    for (std::uint32_t i = 0; i < g.node_count(); ++i) {
        const auto& a = g.attrs(i);
        nodes << fmt::format("{},{},{},{},{},{},{}\n", h3::to_string(g.cell(i)), a.median_lon, a.median_lat,
                             a.msg_count, a.distinct_vessels, opt(a.median_sog), opt(a.median_cog));
    }
    edges << "from,to,weight,grid_dist\n";
    for (const auto& e : g.edges()) {
        edges << fmt::format("{},{},{},{}\n", h3::to_string(g.cell(e.from)), h3::to_string(g.cell(e.to)),
                             e.attrs.weight, e.attrs.grid_dist);
    }
}

std::optional<CellId> nearest_node(const TrafficGraph& g, CellId cell, int k_max) {
    if (h3::resolution(cell) != g.resolution()) {
        throw std::invalid_argument("nearest_node: query cell resolution differs from graph resolution");
    }
    if (g.contains(cell)) return cell;
    if (g.empty()) return std::nullopt;
    const auto center = h3::cell_to_lat_lng(cell);
    std::vector<CellId> frontier{cell};
    std::unordered_set<CellId> seen{cell};
    for (int k = 1; k <= k_max; ++k) {
        std::vector<CellId> ring;
        for (const auto f : frontier) {
            for (const auto n : h3::neighbors(f)) {
                if (seen.insert(n).second) ring.push_back(n);
            }
        }
        std::optional<CellId> best;
        double best_d = 0.0;
        for (const auto c : ring) {
            const NodeAttrs* a = g.node(c);
            if (a == nullptr) continue;
            const double d = geo::haversine_m(center.lat, center.lng, a->median_lat, a->median_lon);
            if (!best || d < best_d || (d == best_d && c < *best)) {
                best = c;
                best_d = d;
            }
        }
        if (best) return best;
        frontier = std::move(ring);
    }
    return std::nullopt;
}

std::uint32_t grid_distance(CellId a, CellId b) {
    if (h3::resolution(a) != h3::resolution(b)) throw std::invalid_argument("grid_distance: cells differ in resolution");
    const auto d = h3::grid_distance(a, b);
    if (!d) {
        throw std::domain_error(fmt::format("grid distance undefined between {} and {}", h3::to_string(a),
                                            h3::to_string(b)));
    }
    return static_cast<std::uint32_t>(*d);
}

}  // namespace habit

#include "habit/imputer.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <tuple>
#include <unordered_map>

namespace habit {

std::optional<Projection> parse_projection(std::string_view s) {
    if (s == "c") return Projection::Center;
    if (s == "w") return Projection::Median;
    return std::nullopt;
}

std::optional<CostMode> parse_cost_mode(std::string_view s) {
    if (s == "hops") return CostMode::Hops;
    if (s == "inverse-frequency" || s == "inverse_frequency") return CostMode::InverseFrequency;
    return std::nullopt;
}

std::optional<Fallback> parse_fallback(std::string_view s) {
    if (s == "error") return Fallback::Error;
    if (s == "straight-line" || s == "straight_line") return Fallback::StraightLine;
    return std::nullopt;
}

std::string_view to_string(Projection p) { return p == Projection::Center ? "c" : "w"; }
std::string_view to_string(CostMode m) { return m == CostMode::Hops ? "hops" : "inverse-frequency"; }
std::string_view to_string(Fallback f) { return f == Fallback::Error ? "error" : "straight-line"; }
std::string_view to_string(ImputedPath::Method m) { return m == ImputedPath::Method::Habit ? "habit" : "sli"; }

void ImputeConfig::validate() const {
    if (!(tolerance_m >= 0.0) || !std::isfinite(tolerance_m)) {
        throw std::invalid_argument(fmt::format("imputer.tolerance must be a finite value >= 0 (got {})", tolerance_m));
    }
    if (k_max < 0) throw std::invalid_argument(fmt::format("imputer.k_max must be >= 0 (got {})", k_max));
    if (!(sli_spacing_m > 0.0)) {
        throw std::invalid_argument(fmt::format("imputer.sli_spacing must be > 0 (got {})", sli_spacing_m));
    }
}

CellId map_endpoint(const TrafficGraph& g, const GeoPoint& pt, const ImputeConfig& cfg) {
    const CellId c = assign_cell(pt.lat, pt.lon, g.resolution());
    if (g.contains(c)) return c;
    if (const auto n = nearest_node(g, c, cfg.k_max)) return *n;
    throw OffNetworkError(fmt::format("no graph node within {} rings of ({}, {})", cfg.k_max, pt.lon, pt.lat));
}

namespace {

constexpr std::uint32_t kNone = TrafficGraph::kNoNode;

struct Search {
    explicit Search(std::size_t n) : cost(n, std::numeric_limits<double>::infinity()), wsum(n, 0), hops(n, 0),
                                     parent(n, kNone), closed(n, 0) {}
    std::vector<double> cost;
    std::vector<std::uint64_t> wsum;
    std::vector<std::uint32_t> hops;
    std::vector<std::uint32_t> parent;
    std::vector<std::uint8_t> closed;
};

// Compares path(a)+x against path(b)+x for two equal-length parent chains,
// lexicographically from the start. Returns <0, 0 or >0.
int compare_chains(const Search& s, const TrafficGraph& g, std::uint32_t a, std::uint32_t b) {
    int result = 0;
    while (a != kNone && b != kNone) {
        if (a != b) {
            const CellId ca = g.cell(a);
            const CellId cb = g.cell(b);
            result = ca < cb ? -1 : 1;
        } else {
            return result;
        }
        a = s.parent[a];
        b = s.parent[b];
    }
    return result;
}

}  // namespace

std::vector<CellId> find_cell_path(const TrafficGraph& g, CellId start, CellId goal, CostMode mode) {
    const auto s_idx = g.index_of(start);
    const auto t_idx = g.index_of(goal);
    if (s_idx == kNone || t_idx == kNone) {
        throw std::invalid_argument(fmt::format("find_cell_path: {} is not a graph node",
                                                h3::to_string(s_idx == kNone ? start : goal)));
    }
    if (s_idx == t_idx) return {start};

    Search s(g.node_count());
    const bool hops_mode = mode == CostMode::Hops;
    const double dmax = std::max<std::uint32_t>(1, g.max_grid_dist());

    std::unordered_map<std::uint32_t, double> h_cache;
    auto heuristic = [&](std::uint32_t v) -> double {
        if (!hops_mode) return 0.0;
        auto [it, inserted] = h_cache.try_emplace(v, 0.0);
        if (inserted) {
            const auto d = h3::grid_distance(g.cell(v), goal);
            it->second = d ? std::ceil(static_cast<double>(*d) / dmax) : 0.0;
        }
        return it->second;
    };

    // (f, g, node); ties on f go to the smaller g so that every predecessor
    // on an optimal path is settled before its successor.
    using Entry = std::tuple<double, double, std::uint32_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
    s.cost[s_idx] = 0.0;
    open.emplace(heuristic(s_idx), 0.0, s_idx);

    while (!open.empty()) {
        const auto [f, gcost, u] = open.top();
        open.pop();
        if (s.closed[u] || gcost != s.cost[u]) continue;
        s.closed[u] = 1;
        if (u == t_idx) break;
        for (const auto& e : g.out_edges(u)) {
            const std::uint32_t v = e.to;
            if (s.closed[v]) continue;
            const double step = hops_mode ? 1.0 : 1.0 / static_cast<double>(e.attrs.weight);
            const double nc = gcost + step;
            const std::uint64_t nw = s.wsum[u] + e.attrs.weight;
            bool better = false;
            if (nc < s.cost[v]) {
                better = true;
            } else if (nc == s.cost[v]) {
                if (nw > s.wsum[v]) {
                    better = true;
                } else if (nw == s.wsum[v] && s.hops[u] + 1 == s.hops[v]) {
                    better = compare_chains(s, g, u, s.parent[v]) < 0;
                } else if (nw == s.wsum[v]) {
                    // Equal cost and weight with different lengths (inverse-frequency only):
                    // compare the full sequences.
                    std::vector<CellId> pa{g.cell(v)};
                    for (auto x = u; x != kNone; x = s.parent[x]) pa.push_back(g.cell(x));
                    std::vector<CellId> pb;
                    for (auto x = v; x != kNone; x = s.parent[x]) pb.push_back(g.cell(x));
                    std::reverse(pa.begin(), pa.end());
                    std::reverse(pb.begin(), pb.end());
                    better = pa < pb;
                }
            }
            if (!better) continue;
            const bool key_changed = nc != s.cost[v];
            s.cost[v] = nc;
            s.wsum[v] = nw;
            s.hops[v] = s.hops[u] + 1;
            s.parent[v] = u;
            if (key_changed) open.emplace(nc + heuristic(v), nc, v);
        }
    }

    if (!s.closed[t_idx]) {
        throw UnreachableError(fmt::format("{} is unreachable from {}", h3::to_string(goal), h3::to_string(start)));
    }
    std::vector<CellId> path;
    for (auto x = t_idx; x != kNone; x = s.parent[x]) path.push_back(g.cell(x));
    std::reverse(path.begin(), path.end());
    return path;
}

double path_cost(const TrafficGraph& g, const std::vector<CellId>& path, CostMode mode) {
    double c = 0.0;
    for (std::size_t i = 1; i < path.size(); ++i) {
        const auto e = g.edge(path[i - 1], path[i]);
        if (!e) {
            throw std::invalid_argument(fmt::format("no edge {} -> {}", h3::to_string(path[i - 1]),
                                                    h3::to_string(path[i])));
        }
        c += mode == CostMode::Hops ? 1.0 : 1.0 / static_cast<double>(e->weight);
    }
    return c;
}

std::vector<GeoPoint> project_path(const TrafficGraph& g, const std::vector<CellId>& cells, Projection p) {
    std::vector<GeoPoint> out;
    out.reserve(cells.size());
    for (const auto c : cells) {
        if (p == Projection::Center) {
            const auto ll = h3::cell_to_lat_lng(c);
            out.push_back({ll.lng, ll.lat, std::nullopt});
        } else {
            const NodeAttrs* a = g.node(c);
            if (a == nullptr) throw std::invalid_argument(fmt::format("{} is not a graph node", h3::to_string(c)));
            out.push_back({a->median_lon, a->median_lat, std::nullopt});
        }
    }
    return out;
}

std::vector<GeoPoint> simplify_rdp(const std::vector<GeoPoint>& points, double t) {
    const std::size_t n = points.size();
    if (n <= 2) return points;
    std::vector<std::uint8_t> keep(n, 0);
    keep[0] = 1;
    keep[n - 1] = 1;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{0, n - 1}};
    while (!stack.empty()) {
        const auto [a, b] = stack.back();
        stack.pop_back();
        if (b <= a + 1) continue;
        double dmax = -1.0;
        std::size_t imax = a;
        for (std::size_t i = a + 1; i < b; ++i) {
            const double d = geo::segment_distance_m(points[i], points[a], points[b]);
            if (d > dmax) {
                dmax = d;
                imax = i;
            }
        }
        if (dmax > t) {
            keep[imax] = 1;
            stack.emplace_back(a, imax);
            stack.emplace_back(imax, b);
        }
    }
    std::vector<GeoPoint> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (keep[i]) out.push_back(points[i]);
    }
    return out;
}

namespace {

void check_gap(const Gap& gap) {
    if (!gap.start.ts || !gap.end.ts) throw std::invalid_argument("gap endpoints need timestamps");
    if (*gap.start.ts >= *gap.end.ts) throw std::invalid_argument("gap start must precede gap end");
}

// Interior timestamps proportional to cumulative arc length, strictly
// increasing. Interior points are dropped when the gap has too few
// milliseconds to separate them.
void assign_times(std::vector<GeoPoint>& pts, std::int64_t t0, std::int64_t t1) {
    const std::size_t n = pts.size();
    if (n < 2 || t1 - t0 < static_cast<std::int64_t>(n - 1)) {
        GeoPoint a = pts.front();
        GeoPoint b = pts.back();
        pts = {a, b};
    }
    const std::size_t m = pts.size();
    std::vector<double> cum(m, 0.0);
    for (std::size_t i = 1; i < m; ++i) cum[i] = cum[i - 1] + geo::haversine_m(pts[i - 1], pts[i]);
    const double total = cum.back();
    const auto dt = static_cast<double>(t1 - t0);
    std::vector<std::int64_t> ts(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double frac = total > 0.0 ? cum[i] / total : static_cast<double>(i) / static_cast<double>(m - 1);
        ts[i] = t0 + std::llround(frac * dt);
    }
    ts.front() = t0;
    ts.back() = t1;
    for (std::size_t i = 1; i + 1 < m; ++i) ts[i] = std::max(ts[i], ts[i - 1] + 1);
    for (std::size_t i = m - 1; i-- > 1;) ts[i] = std::min(ts[i], ts[i + 1] - 1);
    for (std::size_t i = 0; i < m; ++i) pts[i].ts = ts[i];
}

}  // namespace

ImputedPath impute_sli(const Gap& gap, double max_spacing_m) {
    check_gap(gap);
    if (!(max_spacing_m > 0.0)) throw std::invalid_argument("impute_sli: spacing must be > 0");
    const double d = geo::haversine_m(gap.start, gap.end);
    const auto segs = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(d / max_spacing_m - 1e-9)));
    ImputedPath out;
    out.method = ImputedPath::Method::Sli;
    out.points.reserve(segs + 1);
    out.points.push_back({gap.start.lon, gap.start.lat, std::nullopt});
    for (std::size_t i = 1; i < segs; ++i) {
        out.points.push_back(geo::interpolate(gap.start, gap.end, static_cast<double>(i) / static_cast<double>(segs)));
    }
    out.points.push_back({gap.end.lon, gap.end.lat, std::nullopt});
    assign_times(out.points, *gap.start.ts, *gap.end.ts);
    return out;
}

ImputedPath impute_gap(const TrafficGraph& g, const Gap& gap, const ImputeConfig& cfg) {
    check_gap(gap);
    std::vector<CellId> cells;
    try {
        const CellId a = map_endpoint(g, gap.start, cfg);
        const CellId b = map_endpoint(g, gap.end, cfg);
        cells = find_cell_path(g, a, b, cfg.cost_mode);
    } catch (const OffNetworkError&) {
        if (cfg.fallback == Fallback::Error) throw;
    } catch (const UnreachableError&) {
        if (cfg.fallback == Fallback::Error) throw;
    }
    if (cells.empty()) {
        ImputedPath sli = impute_sli(gap, cfg.sli_spacing_m);
        sli.fallback_used = true;
        return sli;
    }

    std::vector<GeoPoint> pts = project_path(g, cells, cfg.projection);
    pts = simplify_rdp(pts, cfg.tolerance_m);
    if (pts.size() < 2) pts.push_back(pts.front());
    pts.front() = {gap.start.lon, gap.start.lat, std::nullopt};
    pts.back() = {gap.end.lon, gap.end.lat, std::nullopt};

    std::vector<GeoPoint> dedup;
    dedup.reserve(pts.size());
    for (const auto& p : pts) {
        if (dedup.empty() || !p.same_position(dedup.back())) dedup.push_back(p);
    }
    if (dedup.size() < 2) dedup.push_back(pts.back());
    assign_times(dedup, *gap.start.ts, *gap.end.ts);

    ImputedPath out;
    out.points = std::move(dedup);
    out.cell_path = std::move(cells);
    out.method = ImputedPath::Method::Habit;
    return out;
}

}  // namespace habit

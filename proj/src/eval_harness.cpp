#include "habit/eval_harness.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "habit/util.hpp"

namespace habit {

void EvalConfig::validate() const {
    if (!(split_ratio > 0.0 && split_ratio < 1.0)) {
        throw std::invalid_argument(fmt::format("eval.split_ratio must be in (0, 1) (got {})", split_ratio));
    }
    if (gap_minutes.empty()) throw std::invalid_argument("eval.gap_durations must not be empty");
    for (const int m : gap_minutes) {
        if (m <= 0) throw std::invalid_argument(fmt::format("eval.gap_durations must all be > 0 (got {})", m));
    }
    if (!(resample_spacing_m > 0.0)) {
        throw std::invalid_argument(fmt::format("eval.resample_spacing must be > 0 (got {})", resample_spacing_m));
    }
    std::set<std::string> labels;
    for (const auto& m : methods) {
        if (!labels.insert(m.label).second) throw std::invalid_argument(fmt::format("duplicate method label {}", m.label));
        if (m.resolution < 0 || m.resolution > h3::kMaxResolution) {
            throw std::invalid_argument(fmt::format("method {}: resolution must be in [0, 15]", m.label));
        }
        m.impute.validate();
    }
}

std::vector<MethodSpec> default_methods() {
    MethodSpec habit;
    habit.label = "habit-r9-t250-w";
    MethodSpec sli;
    sli.label = "sli";
    sli.kind = MethodSpec::Kind::Sli;
    return {habit, sli};
}

std::vector<GeoPoint> GapCase::truth_path() const {
    std::vector<GeoPoint> out;
    out.reserve(removed.size() + 2);
    out.push_back(gap.start);
    for (const auto& r : removed) out.push_back(r.point());
    out.push_back(gap.end);
    return out;
}

std::pair<std::vector<Trip>, std::vector<Trip>> split_trips(std::vector<Trip> trips, double ratio,
                                                            std::uint64_t seed) {
    if (trips.size() < 2) throw std::invalid_argument("split_trips needs at least 2 trips");
    std::mt19937_64 rng(seed);
    for (std::size_t i = trips.size() - 1; i > 0; --i) {
        std::uniform_int_distribution<std::size_t> pick(0, i);
        std::swap(trips[i], trips[pick(rng)]);
    }
    const auto n = trips.size();
    const auto want = static_cast<std::size_t>(std::ceil(ratio * static_cast<double>(n) - 1e-9));
    const auto n_train = std::clamp<std::size_t>(want, 1, n - 1);
    std::vector<Trip> test(std::make_move_iterator(trips.begin() + static_cast<std::ptrdiff_t>(n_train)),
                           std::make_move_iterator(trips.end()));
    trips.resize(n_train);
    return {std::move(trips), std::move(test)};
}

std::uint64_t case_seed(std::uint64_t seed, const std::string& trip_id, int gap_minutes) {
    return splitmix64(seed ^ fnv1a64(trip_id) ^ static_cast<std::uint64_t>(gap_minutes));
}

std::optional<GapCase> inject_gap(const Trip& trip, int gap_minutes, std::uint64_t seed) {
    if (trip.points.size() < 2 || gap_minutes <= 0) return std::nullopt;
    const std::int64_t dur = static_cast<std::int64_t>(gap_minutes) * 60'000;
    const std::int64_t t0 = trip.start_ts();
    const std::int64_t t1 = trip.end_ts();
    // w in [t0 + 1, t1 - dur - 1] keeps the window strictly inside the span.
    if (t1 - t0 - dur < 2) return std::nullopt;
    std::mt19937_64 rng(case_seed(seed, trip.trip_id, gap_minutes));
    std::uniform_int_distribution<std::int64_t> pick(t0 + 1, t1 - dur - 1);
    const std::int64_t w = pick(rng);

    const auto& pts = trip.points;
    std::size_t first = 0;
    while (first < pts.size() && pts[first].ts <= w) ++first;
    std::size_t last = first;
    while (last < pts.size() && pts[last].ts < w + dur) ++last;

    GapCase gc;
    gc.trip_id = trip.trip_id;
    gc.gap_minutes = gap_minutes;
    gc.window_start_ms = w;
    gc.first_removed = first;
    gc.removed.assign(pts.begin() + static_cast<std::ptrdiff_t>(first), pts.begin() + static_cast<std::ptrdiff_t>(last));
    gc.gap.start = pts[first - 1].point();
    gc.gap.end = pts[last].point();
    gc.gap.vessel_id = trip.vessel_id;
    gc.gap.trip_id = trip.trip_id;
    return gc;
}

std::vector<GeoPoint> resample_path(const std::vector<GeoPoint>& points, double max_spacing_m) {
    if (!(max_spacing_m > 0.0)) throw std::invalid_argument("resample_path: spacing must be > 0");
    std::vector<GeoPoint> out;
    if (points.empty()) return out;
    out.push_back(points.front());
    for (std::size_t i = 1; i < points.size(); ++i) {
        const auto& a = points[i - 1];
        const auto& b = points[i];
        const double d = geo::haversine_m(a, b);
        const auto segs = static_cast<std::size_t>(std::ceil(d / max_spacing_m - 1e-9));
        for (std::size_t k = 1; k < segs; ++k) {
            out.push_back(geo::interpolate(a, b, static_cast<double>(k) / static_cast<double>(segs)));
        }
        out.push_back(b);
    }
    return out;
}

double dtw(const std::vector<GeoPoint>& a, const std::vector<GeoPoint>& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("dtw needs non-empty sequences");
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    struct Cell {
        double cost;
        std::size_t len;
    };
    auto better = [](const Cell& x, const Cell& y) { return x.cost < y.cost || (x.cost == y.cost && x.len < y.len); };
    constexpr Cell kInf{std::numeric_limits<double>::infinity(), 0};
    std::vector<Cell> prev(m + 1, kInf);
    std::vector<Cell> cur(m + 1, kInf);
    prev[0] = {0.0, 0};
    for (std::size_t i = 1; i <= n; ++i) {
        cur[0] = kInf;
        for (std::size_t j = 1; j <= m; ++j) {
            Cell best = prev[j - 1];
            if (better(prev[j], best)) best = prev[j];
            if (better(cur[j - 1], best)) best = cur[j - 1];
            cur[j] = {best.cost + geo::haversine_m(a[i - 1], b[j - 1]), best.len + 1};
        }
        std::swap(prev, cur);
    }
    return prev[m].cost / static_cast<double>(prev[m].len);
}

TurnStats turn_stats(const std::vector<GeoPoint>& path) {
    TurnStats s;
    s.cnt = path.size();
    if (path.size() < 3) return s;
    std::vector<double> bearings;
    for (std::size_t i = 1; i < path.size(); ++i) {
        if (path[i].same_position(path[i - 1])) continue;
        bearings.push_back(geo::bearing_deg(path[i - 1], path[i]));
    }
    double sum = 0.0;
    double mx = 0.0;
    std::size_t gt45 = 0;
    std::size_t n = 0;
    for (std::size_t i = 1; i < bearings.size(); ++i) {
        double rot = std::fabs(bearings[i] - bearings[i - 1]);
        if (rot > 180.0) rot = 360.0 - rot;
        sum += rot;
        mx = std::max(mx, rot);
        if (rot > 45.0) ++gt45;
        ++n;
    }
    s.avg_rot_deg = n > 0 ? sum / static_cast<double>(n) : 0.0;
    s.max_rot_deg = mx;
    s.n_gt45 = gt45;
    return s;
}

const MethodSummary* EvalReport::summary(const std::string& method, int gap_minutes) const {
    for (const auto& s : summaries) {
        if (s.method == method && s.gap_minutes == gap_minutes) return &s;
    }
    return nullptr;
}

namespace {

MethodSummary summarize(const std::string& method, int gap_minutes, const std::vector<const CaseResult*>& rs) {
    MethodSummary s;
    s.method = method;
    s.gap_minutes = gap_minutes;
    s.cases = rs.size();
    std::vector<double> d;
    double lat_sum = 0.0;
    double cnt_sum = 0.0;
    double rot_sum = 0.0;
    double gt45_sum = 0.0;
    std::size_t turn_n = 0;
    for (const auto* r : rs) {
        lat_sum += r->latency_s;
        s.latency_max_s = std::max(s.latency_max_s, r->latency_s);
        if (r->fallback_used) ++s.fallbacks;
        if (!r->dtw_m) {
            ++s.failed;
            continue;
        }
        d.push_back(*r->dtw_m);
        cnt_sum += static_cast<double>(r->turns.cnt);
        if (r->turns.avg_rot_deg) {
            rot_sum += *r->turns.avg_rot_deg;
            gt45_sum += static_cast<double>(*r->turns.n_gt45);
            s.max_rot_deg = std::max(s.max_rot_deg, *r->turns.max_rot_deg);
            ++turn_n;
        }
    }
    if (!rs.empty()) s.latency_avg_s = lat_sum / static_cast<double>(rs.size());
    if (!d.empty()) {
        s.mean_dtw_m = std::accumulate(d.begin(), d.end(), 0.0) / static_cast<double>(d.size());
        s.median_dtw_m = median(d);
        s.avg_cnt = cnt_sum / static_cast<double>(d.size());
    }
    if (turn_n > 0) {
        s.avg_rot_deg = rot_sum / static_cast<double>(turn_n);
        s.avg_n_gt45 = gt45_sum / static_cast<double>(turn_n);
    }
    return s;
}

}  // namespace

EvalReport run_benchmark(const std::vector<Trip>& trips, const EvalConfig& cfg) {
    cfg.validate();
    std::vector<MethodSpec> methods = cfg.methods.empty() ? default_methods() : cfg.methods;
    EvalReport rep;
    for (const int m : cfg.gap_minutes) rep.skipped[m] = 0;
    if (trips.size() < 2) {
        for (const auto& m : methods) {
            rep.summaries.push_back(summarize(m.label, 0, {}));
            for (const int g : cfg.gap_minutes) rep.summaries.push_back(summarize(m.label, g, {}));
        }
        return rep;
    }

    auto [train, test] = split_trips(trips, cfg.split_ratio, cfg.seed);
    rep.train_trips = train.size();
    rep.test_trips = test.size();
    const unsigned workers = resolve_workers(cfg.workers);

    std::map<int, TrafficGraph> graphs;
    for (const auto& m : methods) {
        if (m.kind != MethodSpec::Kind::Habit || graphs.count(m.resolution) != 0) continue;
        const auto t_start = std::chrono::steady_clock::now();
        const auto kept = filter_micro_trips(train, m.resolution);
        const auto cells = aggregate_cells(kept, m.resolution, {false, workers});
        const auto trans = aggregate_transitions(kept, m.resolution, workers);
        std::uint64_t records = 0;
        for (const auto& t : kept) records += t.points.size();
        TrafficGraph g = build_graph(cells, trans, m.resolution, {"eval-train", records, kept.size(), 0});
        const auto bytes = serialize_graph(g).size();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
        rep.graphs.push_back({m.resolution, g.node_count(), g.edge_count(), bytes, secs});
        graphs.emplace(m.resolution, std::move(g));
    }

    std::vector<GapCase> cases;
    for (const auto& t : test) {
        for (const int m : cfg.gap_minutes) {
            if (auto gc = inject_gap(t, m, cfg.seed)) {
                cases.push_back(std::move(*gc));
            } else {
                ++rep.skipped[m];
            }
        }
    }
    rep.gap_cases = cases.size();

    const unsigned impute_workers = cfg.sequential_timing ? 1u : workers;
    for (const auto& m : methods) {
        std::vector<CaseResult> results(cases.size());
        const TrafficGraph* g = m.kind == MethodSpec::Kind::Habit ? &graphs.at(m.resolution) : nullptr;
        parallel_for(cases.size(), impute_workers, [&](std::size_t i) {
            const GapCase& gc = cases[i];
            CaseResult& r = results[i];
            r.trip_id = gc.trip_id;
            r.gap_minutes = gc.gap_minutes;
            r.method = m.label;
            r.kind = m.kind == MethodSpec::Kind::Habit ? "habit" : "sli";
            try {
                const auto t_start = std::chrono::steady_clock::now();
                ImputedPath p = g != nullptr ? impute_gap(*g, gc.gap, m.impute)
                                             : impute_sli(gc.gap, m.impute.sli_spacing_m);
                r.latency_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
                r.fallback_used = p.fallback_used;
                r.turns = turn_stats(p.points);
                r.dtw_m = dtw(resample_path(p.points, cfg.resample_spacing_m),
                              resample_path(gc.truth_path(), cfg.resample_spacing_m));
            } catch (const std::exception& e) {
                r.error = e.what();
                r.dtw_m.reset();
            }
        });

        std::vector<const CaseResult*> all;
        for (const auto& r : results) all.push_back(&r);
        rep.summaries.push_back(summarize(m.label, 0, all));
        for (const int gm : cfg.gap_minutes) {
            std::vector<const CaseResult*> sub;
            for (const auto& r : results) {
                if (r.gap_minutes == gm) sub.push_back(&r);
            }
            rep.summaries.push_back(summarize(m.label, gm, sub));
        }
        for (auto& r : results) rep.cases.push_back(std::move(r));
    }
    return rep;
}

nlohmann::json report_to_json(const EvalReport& r, bool include_timing) {
    using nlohmann::json;
    json out;
    out["train_trips"] = r.train_trips;
    out["test_trips"] = r.test_trips;
    out["gap_cases"] = r.gap_cases;
    json skipped = json::object();
    for (const auto& [m, n] : r.skipped) skipped[std::to_string(m)] = n;
    out["skipped"] = skipped;

    json graphs = json::array();
    for (const auto& g : r.graphs) {
        json j = {{"resolution", g.resolution}, {"nodes", g.nodes}, {"edges", g.edges},
                  {"storage_bytes", g.storage_bytes}};
        if (include_timing) j["build_s"] = g.build_s;
        graphs.push_back(j);
    }
    out["graphs"] = graphs;

    json methods = json::object();
    for (const auto& s : r.summaries) {
        json j = {{"cases", s.cases},           {"failed", s.failed},           {"fallbacks", s.fallbacks},
                  {"mean_dtw_m", s.mean_dtw_m}, {"median_dtw_m", s.median_dtw_m}, {"avg_cnt", s.avg_cnt},
                  {"avg_rot_deg", s.avg_rot_deg}, {"max_rot_deg", s.max_rot_deg}, {"avg_n_gt45", s.avg_n_gt45}};
        if (include_timing) {
            j["latency_avg_s"] = s.latency_avg_s;
            j["latency_max_s"] = s.latency_max_s;
        }
        const std::string key = s.gap_minutes == 0 ? "all" : std::to_string(s.gap_minutes);
        methods[s.method][key] = j;
    }
    out["methods"] = methods;

    json cases = json::array();
    for (const auto& c : r.cases) {
        json j = {{"trip_id", c.trip_id}, {"gap_minutes", c.gap_minutes}, {"method", c.method},
                  {"fallback_used", c.fallback_used}, {"cnt", c.turns.cnt}};
        j["dtw_m"] = c.dtw_m ? json(*c.dtw_m) : json(nullptr);
        if (!c.error.empty()) j["error"] = c.error;
        if (include_timing) j["latency_s"] = c.latency_s;
        cases.push_back(j);
    }
    out["cases"] = cases;
    return out;
}

void write_report_text(const EvalReport& r, std::ostream& out) {
    out << fmt::format("train trips {}  test trips {}  gap cases {}\n", r.train_trips, r.test_trips, r.gap_cases);
    for (const auto& [m, n] : r.skipped) out << fmt::format("skipped ({} min): {}\n", m, n);
    out << '\n';
    out << fmt::format("{:>4} {:>10} {:>10} {:>10}\n", "r", "nodes", "edges", "bytes");
    for (const auto& g : r.graphs) {
        out << fmt::format("{:>4} {:>10} {:>10} {:>10}\n", g.resolution, g.nodes, g.edges, g.storage_bytes);
    }
    out << '\n';
    out << fmt::format("{:<24} {:>5} {:>6} {:>6} {:>10} {:>10} {:>9} {:>9} {:>8} {:>8} {:>8} {:>6}\n", "method", "gap",
                       "cases", "failed", "mean_dtw", "median_dtw", "lat_avg", "lat_max", "cnt", "avg_rot",
                       "max_rot", ">45");
    for (const auto& s : r.summaries) {
        const std::string gap = s.gap_minutes == 0 ? "all" : std::to_string(s.gap_minutes);
        out << fmt::format("{:<24} {:>5} {:>6} {:>6} {:>10.2f} {:>10.2f} {:>9.4f} {:>9.4f} {:>8.2f} {:>8.2f} {:>8.2f} "
                           "{:>6.2f}\n",
                           s.method, gap, s.cases, s.failed, s.mean_dtw_m, s.median_dtw_m, s.latency_avg_s,
                           s.latency_max_s, s.avg_cnt, s.avg_rot_deg, s.max_rot_deg, s.avg_n_gt45);
    }
}

void write_cases_csv(const EvalReport& r, std::ostream& out) {
    out << "trip_id,gap_minutes,method,config,dtw_m,latency_s,fallback_used,error\n";
    for (const auto& c : r.cases) {
        std::string err = c.error;
        std::replace(err.begin(), err.end(), ',', ';');
        std::replace(err.begin(), err.end(), '\n', ' ');
        out << fmt::format("{},{},{},{},{},{},{},{}\n", c.trip_id, c.gap_minutes, c.kind, c.method,
                           c.dtw_m ? fmt::format("{}", *c.dtw_m) : std::string(), c.latency_s,
                           c.fallback_used ? "true" : "false", err);
    }
}

}  // namespace habit

#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "habit/geo.hpp"
#include "habit/imputer.hpp"
#include "habit/traffic_graph.hpp"

using namespace habit;

namespace {

constexpr int kRes = 9;
const CellId kA = h3::from_string("891f058317bffff");

NodeAttrs attrs_at(CellId c) {
    const auto ll = h3::cell_to_lat_lng(c);
    return {ll.lng, ll.lat, 1, 1, std::nullopt, std::nullopt};
}

// A -> B -> D (weights 5, 5) and A -> C -> D (weights 1, 1).
struct Diamond {
    CellId a, b, c, d;
    TrafficGraph g;
};

Diamond diamond() {
    const auto n = h3::neighbors(kA);
    Diamond dm{kA, n[0], 0, 0, {}};
    for (const auto x : n) {
        if (h3::grid_distance(x, dm.b) == 1) dm.c = x;
    }
    for (const auto x : h3::neighbors(dm.b)) {
        if (x != kA && h3::grid_distance(x, dm.c) == 1) dm.d = x;
    }
    std::vector<CellId> cells{dm.a, dm.b, dm.c, dm.d};
    std::sort(cells.begin(), cells.end());
    auto idx = [&](CellId x) { return static_cast<std::uint32_t>(std::find(cells.begin(), cells.end(), x) - cells.begin()); };
    std::vector<NodeAttrs> attrs;
    for (const auto x : cells) attrs.push_back(attrs_at(x));
    auto gd = [](CellId x, CellId y) { return static_cast<std::uint32_t>(*h3::grid_distance(x, y)); };
    std::vector<Edge> edges{{idx(dm.a), idx(dm.b), {5, gd(dm.a, dm.b)}},
                            {idx(dm.b), idx(dm.d), {5, gd(dm.b, dm.d)}},
                            {idx(dm.a), idx(dm.c), {1, gd(dm.a, dm.c)}},
                            {idx(dm.c), idx(dm.d), {1, gd(dm.c, dm.d)}}};
    dm.g = TrafficGraph(kRes, cells, attrs, edges, {});
    return dm;
}

GeoPoint at(CellId c, std::int64_t ts) {
    const auto ll = h3::cell_to_lat_lng(c);
    return {ll.lng, ll.lat, ts};
}

}  // namespace

TEST_CASE("option parsing") {
    CHECK(parse_projection("w") == Projection::Median);
    CHECK(parse_projection("c") == Projection::Center);
    CHECK_FALSE(parse_projection("x").has_value());
    CHECK(parse_cost_mode("inverse-frequency") == CostMode::InverseFrequency);
    CHECK(parse_fallback("error") == Fallback::Error);
    ImputeConfig bad;
    bad.tolerance_m = -1.0;
    CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("tolerance"), std::invalid_argument);
}

TEST_CASE("diamond: equal hops resolved by weight") {
    const auto dm = diamond();
    CHECK(find_cell_path(dm.g, dm.a, dm.a, CostMode::Hops) == std::vector<CellId>{dm.a});
    CHECK(find_cell_path(dm.g, dm.a, dm.d, CostMode::Hops) == std::vector<CellId>{dm.a, dm.b, dm.d});
    CHECK(path_cost(dm.g, {dm.a, dm.b, dm.d}, CostMode::Hops) == 2.0);
    CHECK(path_cost(dm.g, {dm.a, dm.b, dm.d}, CostMode::InverseFrequency) == doctest::Approx(0.4));
    CHECK(find_cell_path(dm.g, dm.a, dm.d, CostMode::InverseFrequency) == std::vector<CellId>{dm.a, dm.b, dm.d});
    CHECK_THROWS_AS(find_cell_path(dm.g, dm.d, dm.a, CostMode::Hops), UnreachableError);
    CHECK_THROWS_AS(path_cost(dm.g, {dm.a, dm.d}, CostMode::Hops), std::invalid_argument);
}

TEST_CASE("projection") {
    const auto dm = diamond();
    const std::vector<CellId> path{dm.a, dm.b, dm.d};
    const auto c = project_path(dm.g, path, Projection::Center);
    const auto w = project_path(dm.g, path, Projection::Median);
    REQUIRE(c.size() == 3);
    REQUIRE(w.size() == 3);
    const auto ll = h3::cell_to_lat_lng(dm.b);
    CHECK(c[1].lat == ll.lat);
    CHECK(c[1].lon == ll.lng);

    std::vector<CellId> cells{kA, h3::neighbors(kA)[0]};
    std::sort(cells.begin(), cells.end());
    std::vector<NodeAttrs> attrs{attrs_at(cells[0]), attrs_at(cells[1])};
    attrs[0].median_lon = 2.0;
    const TrafficGraph g(kRes, cells, attrs, {{0, 1, {1, 1}}}, {});
    CHECK(project_path(g, {cells[0]}, Projection::Median)[0].lon == 2.0);
}

TEST_CASE("map_endpoint") {
    const auto dm = diamond();
    ImputeConfig cfg;
    CHECK(map_endpoint(dm.g, at(dm.a, 0), cfg) == dm.a);
    std::optional<CellId> outside;
    for (const auto x : h3::neighbors(dm.d)) {
        if (!dm.g.contains(x)) outside = x;
    }
    REQUIRE(outside);
    CHECK(dm.g.contains(map_endpoint(dm.g, at(*outside, 0), cfg)));
    cfg.k_max = 2;
    CHECK_THROWS_AS(map_endpoint(dm.g, {-30.0, 40.0, 0}, cfg), OffNetworkError);
}

TEST_CASE("rdp") {
    const GeoPoint a{12.0, 55.0, std::nullopt};
    const GeoPoint b = geo::destination(a, 90.0, 10'000.0);
    const GeoPoint mid = geo::interpolate(a, b, 0.5);
    const GeoPoint off = geo::destination(mid, 0.0, 300.0);
    const std::vector<GeoPoint> three{a, off, b};
    CHECK(simplify_rdp(three, 250.0).size() == 3);
    CHECK(simplify_rdp(three, 500.0) == std::vector<GeoPoint>{a, b});
    CHECK(simplify_rdp({a, b}, 1000.0) == std::vector<GeoPoint>{a, b});

    // Zero tolerance keeps a real corner and drops only points on the chord.
    const GeoPoint corner = geo::destination(b, 0.0, 5000.0);
    const std::vector<GeoPoint> bent{a, mid, b, geo::interpolate(b, corner, 0.5), corner};
    const auto kept = simplify_rdp(bent, 0.0);
    CHECK(std::find(kept.begin(), kept.end(), b) != kept.end());
    CHECK(kept.size() <= bent.size());
}

TEST_CASE("straight-line interpolation") {
    const GeoPoint a{12.0, 55.0, 0};
    GeoPoint b = geo::destination(a, 90.0, 1000.0);
    b.ts = 400'000;
    const auto p = impute_sli({a, b, "v", "t"}, 250.0);
    REQUIRE(p.points.size() == 5);
    for (int i = 0; i < 5; ++i) {
        CHECK(geo::haversine_m(a, p.points[i]) == doctest::Approx(250.0 * i).epsilon(1e-6));
        CHECK(p.points[i].ts == 100'000 * i);
    }
    CHECK(p.method == ImputedPath::Method::Sli);

    const auto same = impute_sli({a, {a.lon, a.lat, 5000}, "v", "t"}, 250.0);
    REQUIRE(same.points.size() == 2);
    CHECK(same.points[0].same_position(same.points[1]));
    CHECK(same.points[1].ts == 5000);
}

TEST_CASE("impute_gap degenerate and fallback cases") {
    const auto dm = diamond();
    ImputeConfig cfg;
    const GeoPoint s = at(dm.a, 0);
    GeoPoint e = s;
    e.lon += 1e-6;
    e.ts = 60'000;
    const auto same = impute_gap(dm.g, {s, e, "v", "t"}, cfg);
    CHECK(same.points == std::vector<GeoPoint>{s, e});

    const auto back = impute_gap(dm.g, {at(dm.d, 0), at(dm.a, 600'000), "v", "t"}, cfg);
    CHECK(back.fallback_used);
    CHECK(back.method == ImputedPath::Method::Sli);
    cfg.fallback = Fallback::Error;
    CHECK_THROWS_AS(impute_gap(dm.g, {at(dm.d, 0), at(dm.a, 600'000), "v", "t"}, cfg), UnreachableError);
}

TEST_CASE("imputation follows a C-shaped corridor") {
    // Three quarters of a 10 km circle.
    const auto line = fixtures::arc_centerline(10'000.0, -45.0, 225.0);
    fixtures::TrafficSpec spec;
    spec.trips = 60;
    spec.lateral_sigma_m = 50.0;
    spec.seed = 3;
    const auto trips = fixtures::make_trips(line, spec);
    const auto g = fixtures::graph_from_trips(trips, kRes);

    GeoPoint s = fixtures::to_geo(line.front());
    GeoPoint e = fixtures::to_geo(line.back());
    s.ts = 0;
    e.ts = 6 * 3'600'000;
    const Gap gap{s, e, "v", "t"};
    const auto p = impute_gap(g, gap, ImputeConfig{});
    CHECK_FALSE(p.fallback_used);
    REQUIRE(p.points.size() > 3);
    CHECK(p.points.front() == s);
    CHECK(p.points.back() == e);

    std::vector<GeoPoint> center;
    for (const auto& xy : line) center.push_back(fixtures::to_geo(xy));
    for (const auto& q : p.points) {
        double best = 1e18;
        for (std::size_t i = 0; i + 1 < center.size(); ++i) {
            best = std::min(best, geo::segment_distance_m(q, center[i], center[i + 1]));
        }
        CHECK(best < 1000.0);
    }
    for (std::size_t i = 1; i < p.points.size(); ++i) CHECK(*p.points[i].ts > *p.points[i - 1].ts);
    // The chord spans the mouth of the C; the imputed path goes around it.
    CHECK(geo::path_length_m(p.points) > 0.8 * geo::path_length_m(center));
    const auto sli = impute_sli(gap, 250.0);
    const GeoPoint chord_mid = sli.points[sli.points.size() / 2];
    double chord_off = 1e18;
    for (std::size_t i = 0; i + 1 < center.size(); ++i) {
        chord_off = std::min(chord_off, geo::segment_distance_m(chord_mid, center[i], center[i + 1]));
    }
    CHECK(chord_off > 2500.0);
}

#include <filesystem>
#include <fstream>
#include <random>

#include <unistd.h>

#include "doctest.h"
#include "habit/geo.hpp"
#include "habit/traffic_graph.hpp"

using namespace habit;
namespace fs = std::filesystem;

namespace {

constexpr int kRes = 9;
const CellId kA = h3::from_string("891f058317bffff");

CellStats stats(CellId c, std::uint64_t n = 3) {
    const auto ll = h3::cell_to_lat_lng(c);
    return {c, n, 1, ll.lng, ll.lat, std::nullopt, std::nullopt};
}

TransitionStats trans(CellId a, CellId b, std::uint64_t w) { return {a, b, w, grid_distance(a, b)}; }

TrafficGraph chain_graph() {
    const auto n = h3::neighbors(kA);
    const CellId b = n[0];
    const CellId c = n[1];
    CellStatsMap cells{{kA, stats(kA)}, {b, stats(b)}, {c, stats(c)}};
    cells[n[2]] = stats(n[2]);
    TransitionMap tr{{{kA, b}, trans(kA, b, 7)}, {{b, c}, trans(b, c, 2)}};
    return build_graph(cells, tr, kRes, {"unit", 9, 2, 1234});
}

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / (name + "-" + std::to_string(::getpid()));
}

}  // namespace

TEST_CASE("build_graph assembles nodes from transitions") {
    const auto g = chain_graph();
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK_FALSE(g.contains(h3::neighbors(kA)[2]));
    CHECK(g.edge(kA, h3::neighbors(kA)[0])->weight == 7);
    CHECK_FALSE(g.edge(h3::neighbors(kA)[0], kA).has_value());
    CHECK(g.out_edges(g.index_of(kA)).size() == 1);
}

TEST_CASE("build_graph names a missing endpoint") {
    const CellId b = h3::neighbors(kA)[0];
    CellStatsMap cells{{kA, stats(kA)}};
    TransitionMap tr{{{kA, b}, trans(kA, b, 1)}};
    const std::string name = h3::to_string(b);
    CHECK_THROWS_WITH_AS(build_graph(cells, tr, kRes), doctest::Contains(name.c_str()), GraphBuildError);
}

TEST_CASE("constructor rejects invalid structure") {
    const CellId b = h3::neighbors(kA)[0];
    std::vector<NodeAttrs> attrs(2);
    std::vector<CellId> cells{std::min(kA, b), std::max(kA, b)};
    CHECK_THROWS_AS(TrafficGraph(kRes, cells, attrs, {{0, 0, {1, 1}}}, {}), GraphBuildError);
    CHECK_THROWS_AS(TrafficGraph(kRes, cells, attrs, {{0, 1, {0, 1}}}, {}), GraphBuildError);
    CHECK_THROWS_AS(TrafficGraph(kRes, cells, attrs, {{0, 1, {1, 1}}, {0, 1, {2, 1}}}, {}), GraphBuildError);
    CHECK_THROWS_AS(TrafficGraph(8, cells, attrs, {}, {}), GraphBuildError);
}

TEST_CASE("serialization round-trips") {
    const auto g = chain_graph();
    const auto bytes = serialize_graph(g);
    REQUIRE(bytes.size() > 24);
    CHECK(std::string(bytes.begin(), bytes.begin() + 4) == "HBTG");
    const auto back = deserialize_graph(bytes);
    CHECK(back == g);
    CHECK(back.metadata() == g.metadata());

    const auto path = temp_file("graph.hbtg");
    save_graph(g, path);
    CHECK(load_graph(path) == g);
    fs::remove(path);
}

TEST_CASE("empty graph is a valid file") {
    const TrafficGraph empty = build_graph({}, {}, kRes);
    const auto back = deserialize_graph(serialize_graph(empty));
    CHECK(back.empty());
    CHECK(back.resolution() == kRes);
}

TEST_CASE("corrupt files are reported, not crashed on") {
    auto bytes = serialize_graph(chain_graph());
    SUBCASE("magic") {
        bytes[0] ^= 0xff;
        CHECK_THROWS_AS(deserialize_graph(bytes), GraphFormatError);
    }
    SUBCASE("version") {
        bytes[4] = 9;
        CHECK_THROWS_AS(deserialize_graph(bytes), GraphFormatError);
    }
    SUBCASE("payload") {
        bytes[bytes.size() - 3] ^= 0x01;
        CHECK_THROWS_AS(deserialize_graph(bytes), GraphFormatError);
    }
    SUBCASE("truncated") {
        bytes.resize(bytes.size() / 2);
        CHECK_THROWS_AS(deserialize_graph(bytes), GraphFormatError);
    }
    SUBCASE("missing file") {
        CHECK_THROWS(load_graph(temp_file("does-not-exist")));
    }
}

TEST_CASE("csv export") {
    const auto dir = temp_file("graph-csv");
    export_graph_csv(chain_graph(), dir);
    std::ifstream nodes(dir / "nodes.csv");
    std::ifstream edges(dir / "edges.csv");
    std::string line;
    int n = 0;
    while (std::getline(nodes, line)) ++n;
    int e = 0;
    while (std::getline(edges, line)) ++e;
    CHECK(n == 4);
    CHECK(e == 3);
    fs::remove_all(dir);
}

TEST_CASE("nearest_node") {
    const auto g = chain_graph();
    CHECK(nearest_node(g, kA) == kA);

    const auto b = h3::neighbors(kA)[0];
    std::optional<CellId> lone;
    for (const auto c : h3::neighbors(b)) {
        if (!g.contains(c)) {
            lone = c;
            break;
        }
    }
    REQUIRE(lone);
    const auto got = nearest_node(g, *lone);
    REQUIRE(got);
    CHECK(h3::grid_distance(*lone, *got) == 1);

    const CellId far = assign_cell(10.0, -40.0, kRes);
    CHECK_FALSE(nearest_node(g, far, 2).has_value());
    CHECK_THROWS_AS(nearest_node(g, h3::cell_to_parent(kA, 8)), std::invalid_argument);
}

TEST_CASE("nearest_node prefers the closer median within a ring") {
    const auto ring = h3::grid_ring(kA, 2);
    const auto q = h3::cell_to_lat_lng(kA);
    const GeoPoint qc{q.lng, q.lat, std::nullopt};
    const CellId near_cell = ring[0];
    const CellId far_cell = ring[6];
    auto at = [&](CellId c, double dist) {
        const auto ll = h3::cell_to_lat_lng(c);
        const double brg = geo::bearing_deg(qc, {ll.lng, ll.lat, std::nullopt});
        const GeoPoint p = geo::destination(qc, brg, dist);
        return NodeAttrs{p.lon, p.lat, 1, 1, std::nullopt, std::nullopt};
    };
    std::vector<CellId> cells{near_cell, far_cell};
    std::vector<NodeAttrs> attrs{at(near_cell, 400.0), at(far_cell, 900.0)};
    if (cells[0] > cells[1]) {
        std::swap(cells[0], cells[1]);
        std::swap(attrs[0], attrs[1]);
    }
    const TrafficGraph g(kRes, cells, attrs, {{0, 1, {1, static_cast<std::uint32_t>(*h3::grid_distance(cells[0], cells[1]))}}}, {});
    CHECK(nearest_node(g, kA) == near_cell);
}

TEST_CASE("nearest_node matches a brute-force ranking") {
    std::mt19937_64 rng(5);
    const auto pool = h3::grid_disk(kA, 10);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<CellId> cells;
        std::sample(pool.begin(), pool.end(), std::back_inserter(cells), 12, rng);
        std::sort(cells.begin(), cells.end());
        std::vector<NodeAttrs> attrs;
        for (const auto c : cells) {
            const auto ll = h3::cell_to_lat_lng(c);
            attrs.push_back({ll.lng + 0.0005, ll.lat, 1, 1, std::nullopt, std::nullopt});
        }
        const TrafficGraph g(kRes, cells, attrs, {{0, 1, {1, static_cast<std::uint32_t>(*h3::grid_distance(cells[0], cells[1]))}}}, {});
        const CellId q = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
        const auto qc = h3::cell_to_lat_lng(q);
        std::tuple<int, double, CellId> best{1 << 30, 0.0, 0};
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const auto d = h3::grid_distance(q, cells[i]);
            if (!d || *d > 16) continue;
            best = std::min(best, {*d, geo::haversine_m(qc.lat, qc.lng, attrs[i].median_lat, attrs[i].median_lon),
                                   cells[i]});
        }
        CHECK(nearest_node(g, q) == std::get<2>(best));
    }
}

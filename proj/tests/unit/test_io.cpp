#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "habit/geojson.hpp"
#include "habit/io.hpp"

using namespace habit;

TEST_CASE("corpus reader collects malformed rows") {
    std::istringstream in(
        "vessel_id,ts,lon,lat,sog,cog\n"
        "1,2024-01-05T10:00:00Z,12.5,55.6,10,90\n"
        "\n"
        "2,not-a-time,12.5,55.6,10,90\n"
        "3,2024-01-05T10:01:00Z,12.6,55.6,,\n");
    Corpus c;
    read_corpus(in, Schema{}, "mem", c);
    CHECK(c.records.size() == 2);
    REQUIRE(c.malformed.size() == 1);
    CHECK(c.malformed[0].line == 4);
    CHECK(c.malformed[0].source == "mem");
}

TEST_CASE("corpus reader rejects a header without a required column") {
    std::istringstream in("vessel_id,ts,lon\n1,2024-01-05T10:00:00Z,12.5\n");
    Corpus c;
    CHECK_THROWS_AS(read_corpus(in, Schema{}, "mem", c), ParseError);
}

TEST_CASE("custom delimiter and time format") {
    Schema s;
    s.delimiter = ';';
    s.time_format = TimeFormat::EpochSeconds;
    std::istringstream in("lat;lon;ts;vessel_id\n55.6;12.5;1704448800;abc\n");
    Corpus c;
    read_corpus(in, s, "mem", c);
    REQUIRE(c.records.size() == 1);
    CHECK(c.records[0].vessel_id == "abc");
    CHECK(c.records[0].ts == 1'704'448'800'000);
    CHECK_FALSE(c.records[0].sog.has_value());
}

TEST_CASE("trips csv round-trips") {
    auto trips = fixtures::straight_corridor();
    trips.resize(5);
    std::stringstream buf;
    write_trips_csv(trips, buf);
    CHECK(read_trips_csv(buf) == trips);
}

TEST_CASE("gaps csv") {
    std::istringstream in(
        "vessel_id,start_lon,start_lat,start_ts,end_lon,end_lat,end_ts\n"
        "v1,12.0,55.0,2024-01-05T10:00:00Z,12.2,55.1,2024-01-05T11:00:00Z\n"
        "v2,12.0,55.0,2024-01-05T12:00:00Z,12.2,55.1,2024-01-05T13:00:00Z\n");
    const auto gaps = read_gaps_csv(in);
    REQUIRE(gaps.size() == 2);
    CHECK(gaps[0].vessel_id == "v1");
    CHECK(gaps[1].trip_id == "gap-1");
    CHECK(*gaps[0].end.ts - *gaps[0].start.ts == 3'600'000);

    std::istringstream bad("v1,12.0,55.0,2024-01-05T10:00:00Z,12.2\n");
    CHECK_THROWS(read_gaps_csv(bad));
}

TEST_CASE("geojson features") {
    const Gap gap{{12.0, 55.0, 0}, {12.1, 55.0, 60'000}, "v", "g"};
    const auto sli = impute_sli(gap, 2000.0);
    const auto f = geojson::imputed_feature(gap, sli);
    CHECK(f["type"] == "Feature");
    CHECK(f["geometry"]["type"] == "LineString");
    CHECK(f["geometry"]["coordinates"].size() == sli.points.size());
    CHECK(f["properties"]["method"] == "sli");
    CHECK(f["properties"]["timestamps"].size() == sli.points.size());

    const auto e = geojson::error_feature(gap, "boom");
    CHECK(e["geometry"].is_null());
    CHECK(e["properties"]["error"] == "boom");

    const auto g = fixtures::graph_from_trips(fixtures::offset_lane(), 8);
    const auto cells = geojson::graph_cells(g);
    REQUIRE(cells["features"].size() == g.node_count());
    const auto ring = cells["features"][0]["geometry"]["coordinates"][0];
    CHECK(ring.front() == ring.back());
    CHECK(ring.size() == 7);
    CHECK(geojson::graph_cells(TrafficGraph{})["features"].empty());
}

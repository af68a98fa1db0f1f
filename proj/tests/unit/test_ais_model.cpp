#include "doctest.h"
#include "habit/ais_model.hpp"

using namespace habit;

TEST_CASE("identity row parses field by field") {
    const auto r = parse_record("219000001,2024-01-05T10:00:00Z,12.5683,55.6761,14.2,87.0", ColumnMap::identity());
    CHECK(r.vessel_id == "219000001");
    CHECK(r.ts == 1'704'448'800'000);
    CHECK(r.lon == 12.5683);
    CHECK(r.lat == 55.6761);
    CHECK(r.sog == 14.2);
    CHECK(r.cog == 87.0);
}

TEST_CASE("malformed latitude is a parse error") {
    try {
        parse_record("219000001,2024-01-05T10:00:00Z,12.5683,abc,14.2,87.0", ColumnMap::identity());
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.reason() == RejectReason::MalformedField);
    }
}

TEST_CASE("empty optional columns are absent") {
    const auto r = parse_record("219000001,2024-01-05T10:00:00Z,12.5683,55.6761,,", ColumnMap::identity());
    CHECK_FALSE(r.sog.has_value());
    CHECK_FALSE(r.cog.has_value());
}

TEST_CASE("validation") {
    AisRecord r{"1", 0, 12.5683, 55.6761, 10.0, 90.0};
    CHECK_FALSE(validate_record(r).has_value());
    r.lat = 91.0;
    CHECK(validate_record(r) == RejectReason::InvalidCoordinates);
    r.lat = 0.0;
    r.lon = 0.0;
    CHECK(validate_record(r) == RejectReason::InvalidCoordinates);
}

TEST_CASE("timestamp formats") {
    CHECK(parse_timestamp("2024-01-05T10:00:00Z", TimeFormat::Iso8601) == 1'704'448'800'000);
    CHECK(parse_timestamp("2024-01-05T11:00:00+01:00", TimeFormat::Iso8601) == 1'704'448'800'000);
    CHECK(parse_timestamp("2024-01-05T10:00:00.250Z", TimeFormat::Iso8601) == 1'704'448'800'250);
    CHECK(parse_timestamp("1704448800", TimeFormat::EpochSeconds) == 1'704'448'800'000);
    CHECK(parse_timestamp("1704448800000", TimeFormat::EpochMillis) == 1'704'448'800'000);
    CHECK(parse_timestamp("05/01/2024 10:00:00", TimeFormat::DayMonthYear) == 1'704'448'800'000);
    CHECK_THROWS_AS(parse_timestamp("yesterday", TimeFormat::Iso8601), ParseError);
    CHECK(format_timestamp(1'704'448'800'000) == "2024-01-05T10:00:00Z");
}

TEST_CASE("schema resolution by header names") {
    Schema s;
    s.vessel_id = "MMSI";
    s.ts = "BaseDateTime";
    s.lon = "LON";
    s.lat = "LAT";
    s.sog = "SOG";
    s.cog = "COG";
    const auto cols = resolve_schema(s, "BaseDateTime,MMSI,LAT,LON,SOG");
    CHECK(cols.vessel_id == 1);
    CHECK(cols.ts == 0);
    CHECK(cols.lat == 2);
    CHECK(cols.lon == 3);
    CHECK(cols.sog == 4);
    CHECK(cols.cog == -1);
    CHECK_THROWS_AS(resolve_schema(s, "BaseDateTime,MMSI,LAT"), ParseError);
}

TEST_CASE("serialize round-trip") {
    const AisRecord r{"vessel-9", 1'704'448'800'123, -3.25, 48.5, std::nullopt, 359.5};
    CHECK(parse_record(serialize_record(r), ColumnMap::identity()) == r);
}

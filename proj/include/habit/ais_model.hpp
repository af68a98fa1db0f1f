#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "habit/geo.hpp"

namespace habit {

struct AisRecord {
    std::string vessel_id;
    std::int64_t ts = 0;  // UTC milliseconds
    double lon = 0.0;
    double lat = 0.0;
    std::optional<double> sog;  // knots
    std::optional<double> cog;  // degrees

    GeoPoint point() const { return {lon, lat, ts}; }
    friend bool operator==(const AisRecord&, const AisRecord&) = default;
};

enum class RejectReason {
    InvalidCoordinates,
    DuplicateRecord,
    OutOfOrder,
    KinematicOutlier,
    MalformedField,
};

inline constexpr RejectReason kAllRejectReasons[] = {
    RejectReason::InvalidCoordinates, RejectReason::DuplicateRecord,
    RejectReason::OutOfOrder, RejectReason::KinematicOutlier,
    RejectReason::MalformedField};

std::string_view to_string(RejectReason r);

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    RejectReason reason() const { return RejectReason::MalformedField; }
};

enum class TimeFormat {
    Iso8601,        // 2024-01-05T10:00:00Z, optional fraction and offset
    EpochSeconds,   // 1704448800 or 1704448800.25
    EpochMillis,    // 1704448800000
    DayMonthYear,   // 05/01/2024 10:00:00
};

std::optional<TimeFormat> parse_time_format(std::string_view name);
std::string_view to_string(TimeFormat f);

std::int64_t parse_timestamp(std::string_view text, TimeFormat fmt);
std::string format_timestamp(std::int64_t ts_ms);

// Column names as they appear in the header of a delimited file.
struct Schema {
    std::string vessel_id = "vessel_id";
    std::string ts = "ts";
    std::string lon = "lon";
    std::string lat = "lat";
    std::string sog = "sog";
    std::string cog = "cog";
    char delimiter = ',';
    TimeFormat time_format = TimeFormat::Iso8601;
};

// Schema resolved against a header row. Optional columns are -1 when absent.
struct ColumnMap {
    int vessel_id = 0;
    int ts = 1;
    int lon = 2;
    int lat = 3;
    int sog = 4;
    int cog = 5;
    char delimiter = ',';
    TimeFormat time_format = TimeFormat::Iso8601;

    static ColumnMap identity() { return {}; }
};

// Throws ParseError naming the first required column missing from header.
ColumnMap resolve_schema(const Schema& schema, std::string_view header);

std::vector<std::string> split_row(std::string_view line, char delim);

AisRecord parse_record(std::string_view line, const ColumnMap& cols);

// Identity-schema row; parse_record(serialize_record(r), identity) == r.
std::string serialize_record(const AisRecord& r, char delim = ',');
std::string identity_header(char delim = ',');

std::optional<RejectReason> validate_record(const AisRecord& r);

}  // namespace habit

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "habit/ais_model.hpp"

namespace habit {

struct SegmenterConfig {
    double stop_speed_knots = 0.5;
    double min_stop_duration_s = 900.0;
    double gap_threshold_s = 1800.0;  // ΔT
    double max_plausible_speed_knots = 50.0;

    // Throws std::invalid_argument naming the offending field.
    void validate() const;
};

struct Trip {
    std::string trip_id;
    std::string vessel_id;
    std::vector<AisRecord> points;

    std::int64_t start_ts() const { return points.front().ts; }
    std::int64_t end_ts() const { return points.back().ts; }
    friend bool operator==(const Trip&, const Trip&) = default;
};

struct Rejection {
    AisRecord record;
    RejectReason reason;
};

struct CleanResult {
    std::vector<AisRecord> accepted;
    std::vector<Rejection> rejected;
};

// Inclusive index range into a cleaned record list.
struct StopInterval {
    std::size_t start;
    std::size_t end;
    friend bool operator==(const StopInterval&, const StopInterval&) = default;
};

// Records are taken in arrival order for a single vessel.
CleanResult clean_stream(const std::vector<AisRecord>& records, const SegmenterConfig& cfg);

std::vector<StopInterval> detect_stops(const std::vector<AisRecord>& records, const SegmenterConfig& cfg);

std::vector<Trip> segment_trips(const std::vector<AisRecord>& records, const SegmenterConfig& cfg);

std::vector<Trip> filter_micro_trips(std::vector<Trip> trips, int r);

std::string make_trip_id(const std::string& vessel_id, std::int64_t first_ts);

// Empty string when the trip satisfies every Trip invariant, else a reason.
std::string check_trip(const Trip& t, const SegmenterConfig& cfg);

struct SegmentationResult {
    std::vector<Trip> trips;
    std::vector<Rejection> rejected;
    std::size_t micro_trips_removed = 0;
};

// Groups records by vessel (keeping arrival order), then cleans, segments and
// drops micro-trips. Vessels are processed in parallel; output is ordered by
// (vessel_id, first ts) regardless of worker count.
SegmentationResult segment_corpus(const std::vector<AisRecord>& records, const SegmenterConfig& cfg, int r,
                                  unsigned workers = 1);

}  // namespace habit

#include "habit/trip_segmenter.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "habit/h3/h3.hpp"
#include "habit/util.hpp"

namespace habit {

void SegmenterConfig::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0)) throw std::invalid_argument(fmt::format("segmenter.{} must be > 0 (got {})", name, v));
    };
    positive(stop_speed_knots, "stop_speed_knots");
    positive(min_stop_duration_s, "min_stop_duration_s");
    positive(gap_threshold_s, "gap_threshold_s");
    positive(max_plausible_speed_knots, "max_plausible_speed_knots");
}

CleanResult clean_stream(const std::vector<AisRecord>& records, const SegmenterConfig& cfg) {
    CleanResult out;
    std::unordered_set<std::int64_t> seen_ts;
    for (const auto& rec : records) {
        if (auto why = validate_record(rec)) {
            out.rejected.push_back({rec, *why});
            continue;
        }
        if (seen_ts.count(rec.ts) != 0) {
            out.rejected.push_back({rec, RejectReason::DuplicateRecord});
            continue;
        }
        if (!out.accepted.empty()) {
            const AisRecord& last = out.accepted.back();
            if (rec.ts <= last.ts) {
                out.rejected.push_back({rec, RejectReason::OutOfOrder});
                continue;
            }
            const double d = geo::haversine_m(last.lat, last.lon, rec.lat, rec.lon);
            if (geo::implied_speed_knots(d, rec.ts - last.ts) > cfg.max_plausible_speed_knots) {
                out.rejected.push_back({rec, RejectReason::KinematicOutlier});
                continue;
            }
        }
        seen_ts.insert(rec.ts);
        out.accepted.push_back(rec);
    }
    return out;
}

namespace {

// Speed used for stop detection: reported sog, else the speed derived from
// the neighbouring position (previous, or next for the first record).
double stop_speed(const std::vector<AisRecord>& r, std::size_t i) {
    if (r[i].sog) return *r[i].sog;
    if (r.size() < 2) return 0.0;
    const std::size_t a = i == 0 ? 0 : i - 1;
    const std::size_t b = i == 0 ? 1 : i;
    const double d = geo::haversine_m(r[a].lat, r[a].lon, r[b].lat, r[b].lon);
    return geo::implied_speed_knots(d, r[b].ts - r[a].ts);
}

}  // namespace

std::vector<StopInterval> detect_stops(const std::vector<AisRecord>& records, const SegmenterConfig& cfg) {
    std::vector<StopInterval> stops;
    const auto min_ms = static_cast<std::int64_t>(cfg.min_stop_duration_s * 1000.0);
    std::size_t i = 0;
    while (i < records.size()) {
        if (stop_speed(records, i) >= cfg.stop_speed_knots) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < records.size() && stop_speed(records, j + 1) < cfg.stop_speed_knots) ++j;
        if (records[j].ts - records[i].ts >= min_ms) stops.push_back({i, j});
        i = j + 1;
    }
    return stops;
}

std::string make_trip_id(const std::string& vessel_id, std::int64_t first_ts) {
    const std::string key = fmt::format("{}|{}", vessel_id, first_ts);
    return fmt::format("{:016x}", fnv1a64(key));
}

std::vector<Trip> segment_trips(const std::vector<AisRecord>& records, const SegmenterConfig& cfg) {
    std::vector<Trip> trips;
    if (records.empty()) return trips;

    const auto stops = detect_stops(records, cfg);
    const auto gap_ms = static_cast<std::int64_t>(cfg.gap_threshold_s * 1000.0);

    std::vector<AisRecord> current;
    auto flush = [&] {
        if (current.size() >= 3) {
            Trip t;
            t.vessel_id = current.front().vessel_id;
            t.trip_id = make_trip_id(t.vessel_id, current.front().ts);
            t.points = std::move(current);
            trips.push_back(std::move(t));
        }
        current.clear();
    };
    auto append = [&](const AisRecord& rec) {
        if (!current.empty() && rec.ts - current.back().ts >= gap_ms) flush();
        current.push_back(rec);
    };

    std::size_t next_stop = 0;
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (next_stop < stops.size() && i == stops[next_stop].start) {
            const StopInterval s = stops[next_stop++];
            // First stop record closes the trip, last one opens the next.
            append(records[s.start]);
            flush();
            if (s.end != s.start) current.push_back(records[s.end]);
            i = s.end;
            continue;
        }
        append(records[i]);
    }
    flush();
    return trips;
}

std::vector<Trip> filter_micro_trips(std::vector<Trip> trips, int r) {
    std::vector<Trip> kept;
    kept.reserve(trips.size());
    for (auto& t : trips) {
        std::set<h3::Cell> cells;
        for (const auto& p : t.points) {
            cells.insert(h3::lat_lng_to_cell(p.lat, p.lon, r));
            if (cells.size() > 2) break;
        }
        bool micro = cells.size() <= 1;
        if (cells.size() == 2) {
            const auto d = h3::grid_distance(*cells.begin(), *cells.rbegin());
            micro = d && *d <= 1;
        }
        if (!micro) kept.push_back(std::move(t));
    }
    return kept;
}

std::string check_trip(const Trip& t, const SegmenterConfig& cfg) {
    if (t.points.size() < 3) return "fewer than 3 points";
    const auto gap_ms = static_cast<std::int64_t>(cfg.gap_threshold_s * 1000.0);
    for (std::size_t i = 1; i < t.points.size(); ++i) {
        if (t.points[i].ts <= t.points[i - 1].ts) return fmt::format("timestamps not increasing at {}", i);
        if (t.points[i].ts - t.points[i - 1].ts >= gap_ms) return fmt::format("gap of at least ΔT at {}", i);
        if (t.points[i].vessel_id != t.vessel_id) return "mixed vessel ids";
    }
    // A stop strictly inside the trip would have split it.
    for (const auto& s : detect_stops(t.points, cfg)) {
        if (s.start > 0 && s.end + 1 < t.points.size()) {
            return fmt::format("interior stop [{}, {}]", s.start, s.end);
        }
    }
    if (t.trip_id != make_trip_id(t.vessel_id, t.points.front().ts)) return "trip id mismatch";
    return {};
}

SegmentationResult segment_corpus(const std::vector<AisRecord>& records, const SegmenterConfig& cfg, int r,
                                  unsigned workers) {
    std::map<std::string, std::vector<AisRecord>> by_vessel;
    for (const auto& rec : records) by_vessel[rec.vessel_id].push_back(rec);

    std::vector<const std::vector<AisRecord>*> streams;
    streams.reserve(by_vessel.size());
    for (const auto& [id, recs] : by_vessel) streams.push_back(&recs);

    struct Partial {
        std::vector<Trip> trips;
        std::vector<Rejection> rejected;
        std::size_t micro = 0;
    };
    std::vector<Partial> parts(streams.size());
    parallel_for(streams.size(), workers, [&](std::size_t i) {
        auto cleaned = clean_stream(*streams[i], cfg);
        auto trips = segment_trips(cleaned.accepted, cfg);
        const std::size_t before = trips.size();
        parts[i].trips = filter_micro_trips(std::move(trips), r);
        parts[i].micro = before - parts[i].trips.size();
        parts[i].rejected = std::move(cleaned.rejected);
    });

    SegmentationResult out;
    for (auto& p : parts) {
        for (auto& t : p.trips) out.trips.push_back(std::move(t));
        for (auto& rj : p.rejected) out.rejected.push_back(std::move(rj));
        out.micro_trips_removed += p.micro;
    }
    return out;
}

}  // namespace habit

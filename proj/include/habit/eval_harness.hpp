#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "habit/imputer.hpp"
#include "habit/trip_segmenter.hpp"
#include "json.hpp"

namespace habit {

struct MethodSpec {
    enum class Kind { Habit, Sli };
    std::string label;
    Kind kind = Kind::Habit;
    int resolution = 9;
    ImputeConfig impute;
};

struct EvalConfig {
    double split_ratio = 0.7;
    std::vector<int> gap_minutes{60, 120, 240};
    std::uint64_t seed = 42;
    double resample_spacing_m = 250.0;
    std::vector<MethodSpec> methods;
    unsigned workers = 1;
    bool sequential_timing = false;

    void validate() const;
};

// Default method set: HABIT at r=9, t=250, p=w plus the SLI baseline.
std::vector<MethodSpec> default_methods();

struct GapCase {
    std::string trip_id;
    int gap_minutes = 0;
    Gap gap;
    std::int64_t window_start_ms = 0;  // window is [start, start + gap_minutes)
    std::size_t first_removed = 0;     // index into the original trip
    std::vector<AisRecord> removed;

    // start, removed points, end.
    std::vector<GeoPoint> truth_path() const;
};

std::pair<std::vector<Trip>, std::vector<Trip>> split_trips(std::vector<Trip> trips, double ratio,
                                                            std::uint64_t seed);

std::uint64_t case_seed(std::uint64_t seed, const std::string& trip_id, int gap_minutes);

// nullopt when the trip is too short for the window.
std::optional<GapCase> inject_gap(const Trip& trip, int gap_minutes, std::uint64_t seed);

std::vector<GeoPoint> resample_path(const std::vector<GeoPoint>& points, double max_spacing_m);

// Mean great-circle distance per step of the optimal warping path, meters.
double dtw(const std::vector<GeoPoint>& a, const std::vector<GeoPoint>& b);

struct TurnStats {
    std::size_t cnt = 0;
    std::optional<double> avg_rot_deg;
    std::optional<double> max_rot_deg;
    std::optional<std::size_t> n_gt45;
};

TurnStats turn_stats(const std::vector<GeoPoint>& path);

struct CaseResult {
    std::string trip_id;
    int gap_minutes = 0;
    std::string method;  // MethodSpec label
    std::string kind;    // "habit" | "sli"
    std::optional<double> dtw_m;
    double latency_s = 0.0;
    bool fallback_used = false;
    std::string error;
    TurnStats turns;
};

struct MethodSummary {
    std::string method;
    int gap_minutes = 0;  // 0 = all durations
    std::size_t cases = 0;
    std::size_t failed = 0;
    std::size_t fallbacks = 0;
    double mean_dtw_m = 0.0;
    double median_dtw_m = 0.0;
    double latency_avg_s = 0.0;
    double latency_max_s = 0.0;
    double avg_cnt = 0.0;
    double avg_rot_deg = 0.0;
    double max_rot_deg = 0.0;
    double avg_n_gt45 = 0.0;
};

struct GraphInfo {
    int resolution = 0;
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::size_t storage_bytes = 0;
    double build_s = 0.0;
};

struct EvalReport {
    std::size_t train_trips = 0;
    std::size_t test_trips = 0;
    std::map<int, std::size_t> skipped;  // per gap duration
    std::size_t gap_cases = 0;
    std::vector<GraphInfo> graphs;
    std::vector<CaseResult> cases;  // method-major, then case order
    std::vector<MethodSummary> summaries;

    const MethodSummary* summary(const std::string& method, int gap_minutes = 0) const;
};

EvalReport run_benchmark(const std::vector<Trip>& trips, const EvalConfig& cfg);

// Timing fields are omitted when include_timing is false, leaving only
// seed-determined content.
nlohmann::json report_to_json(const EvalReport& r, bool include_timing = true);
void write_report_text(const EvalReport& r, std::ostream& out);
void write_cases_csv(const EvalReport& r, std::ostream& out);

}  // namespace habit

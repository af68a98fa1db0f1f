#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "habit/h3/h3.hpp"
#include "habit/trip_segmenter.hpp"

namespace habit {

using CellId = h3::Cell;

struct CellStats {
    CellId cell = 0;
    std::uint64_t msg_count = 0;
    std::uint64_t distinct_vessels = 0;
    double median_lon = 0.0;
    double median_lat = 0.0;
    std::optional<double> median_sog;
    std::optional<double> median_cog;
    friend bool operator==(const CellStats&, const CellStats&) = default;
};

struct TransitionStats {
    CellId from = 0;
    CellId to = 0;
    std::uint64_t trip_count = 0;
    std::uint32_t grid_dist = 0;
    friend bool operator==(const TransitionStats&, const TransitionStats&) = default;
};

using CellStatsMap = std::map<CellId, CellStats>;
using TransitionKey = std::pair<CellId, CellId>;
using TransitionMap = std::map<TransitionKey, TransitionStats>;

// Throws std::invalid_argument for a resolution outside [0, 15] or an
// out-of-range coordinate.
CellId assign_cell(double lat, double lon, int r);

// Grid distance for a stored transition. Falls back to a spacing-based
// estimate (at least 1) where local IJ unfolding is undefined.
std::uint32_t transition_grid_distance(CellId a, CellId b);

// Midpoint-interpolated median. Empty input yields NaN.
double median(std::vector<double> values);

// Angle among the inputs minimising the summed angular distance to all
// inputs; the smallest such angle wins ties. Degrees in [0, 360).
double circular_median_deg(std::vector<double> angles);

// HyperLogLog with 2^14 registers.
class HyperLogLog {
public:
    static constexpr int kPrecision = 14;
    HyperLogLog();
    void add_hash(std::uint64_t h);
    void merge(const HyperLogLog& o);
    double estimate() const;

private:
    std::vector<std::uint8_t> reg_;
};

// Distinct-vessel counter: exact by default; in sketch mode it keeps an exact
// set up to a threshold and then switches to HyperLogLog.
class DistinctCounter {
public:
    static constexpr std::size_t kExactLimit = 1024;
    explicit DistinctCounter(bool sketch = false) : sketch_(sketch) {}
    void add(const std::string& id);
    void merge(const DistinctCounter& o);
    std::uint64_t count() const;

private:
    void promote();
    bool sketch_;
    std::unordered_set<std::string> exact_;
    std::optional<HyperLogLog> hll_;
};

// Mergeable per-cell buffer.
struct CellAccumulator {
    std::uint64_t msg_count = 0;
    std::vector<double> lons;
    std::vector<double> lats;
    std::vector<double> sogs;
    std::vector<double> cogs;
    DistinctCounter vessels;

    explicit CellAccumulator(bool sketch = false) : vessels(sketch) {}
    void add(const AisRecord& rec);
    void merge(CellAccumulator&& o);
    CellStats finish(CellId cell) const;
};

struct AggregateOptions {
    bool approximate_distinct = false;
    unsigned workers = 1;
};

CellStatsMap aggregate_cells(const std::vector<Trip>& trips, int r, const AggregateOptions& opts = {});
TransitionMap aggregate_transitions(const std::vector<Trip>& trips, int r, unsigned workers = 1);

}  // namespace habit

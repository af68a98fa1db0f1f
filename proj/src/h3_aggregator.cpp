#include "habit/h3_aggregator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "habit/util.hpp"

namespace habit {

CellId assign_cell(double lat, double lon, int r) {
    if (r < 0 || r > h3::kMaxResolution) throw std::invalid_argument("resolution must be in [0, 15]");
    if (!(lat >= -90.0 && lat <= 90.0 && lon >= -180.0 && lon <= 180.0)) {
        throw std::invalid_argument("coordinate out of range");
    }
    return h3::lat_lng_to_cell(lat, lon, r);
}

std::uint32_t transition_grid_distance(CellId a, CellId b) {
    if (a == b) return 0;
    if (const auto d = h3::grid_distance(a, b)) return static_cast<std::uint32_t>(*d);

    const auto ca = h3::cell_to_lat_lng(a);
    const auto cb = h3::cell_to_lat_lng(b);
    const auto ring = h3::neighbors(a);
    double spacing = std::numeric_limits<double>::infinity();
    for (const auto n : ring) {
        const auto cn = h3::cell_to_lat_lng(n);
        spacing = std::min(spacing, geo::haversine_m(ca.lat, ca.lng, cn.lat, cn.lng));
    }
    const double d = geo::haversine_m(ca.lat, ca.lng, cb.lat, cb.lng);
    return static_cast<std::uint32_t>(std::max(1.0, std::round(d / spacing)));
}

double median(std::vector<double> v) {
    if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
    const std::size_t n = v.size();
    const std::size_t mid = n / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
    const double hi = v[mid];
    if (n % 2 == 1) return hi;
    const double lo = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
    return lo + (hi - lo) / 2.0;
}

double circular_median_deg(std::vector<double> a) {
    if (a.empty()) return std::numeric_limits<double>::quiet_NaN();
    for (auto& x : a) {
        x = std::fmod(x, 360.0);
        if (x < 0.0) x += 360.0;
    }
    std::sort(a.begin(), a.end());
    const std::size_t n = a.size();

    // b = a followed by a + 360; prefix sums over b.
    std::vector<double> b(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        b[i] = a[i];
        b[i + n] = a[i] + 360.0;
    }
    std::vector<double> pre(2 * n + 1, 0.0);
    for (std::size_t i = 0; i < 2 * n; ++i) pre[i + 1] = pre[i] + b[i];

    double best = std::numeric_limits<double>::infinity();
    double best_angle = a[0];
    for (std::size_t i = 0; i < n; ++i) {
        const double theta = a[i];
        // Forward offsets b[j] - theta for j in [i, i+n) lie in [0, 360).
        const auto first = b.begin() + static_cast<std::ptrdiff_t>(i);
        const auto last = b.begin() + static_cast<std::ptrdiff_t>(i + n);
        const auto k = static_cast<std::size_t>(std::upper_bound(first, last, theta + 180.0) - b.begin());
        const double near_cnt = static_cast<double>(k - i);
        const double far_cnt = static_cast<double>(i + n - k);
        const double near_sum = (pre[k] - pre[i]) - near_cnt * theta;
        const double far_sum = far_cnt * 360.0 - ((pre[i + n] - pre[k]) - far_cnt * theta);
        const double cost = near_sum + far_sum;
        if (cost < best - 1e-9) {
            best = cost;
            best_angle = theta;
        }
    }
    return best_angle;
}

HyperLogLog::HyperLogLog() : reg_(std::size_t{1} << kPrecision, 0) {}

void HyperLogLog::add_hash(std::uint64_t h) {
    const std::uint64_t idx = h >> (64 - kPrecision);
    const std::uint64_t w = (h << kPrecision) | (std::uint64_t{1} << (kPrecision - 1));
    const auto rho = static_cast<std::uint8_t>(__builtin_clzll(w) + 1);
    reg_[idx] = std::max(reg_[idx], rho);
}

void HyperLogLog::merge(const HyperLogLog& o) {
    for (std::size_t i = 0; i < reg_.size(); ++i) reg_[i] = std::max(reg_[i], o.reg_[i]);
}

double HyperLogLog::estimate() const {
    const double m = static_cast<double>(reg_.size());
    double sum = 0.0;
    std::size_t zeros = 0;
    for (const auto r : reg_) {
        sum += std::ldexp(1.0, -r);
        if (r == 0) ++zeros;
    }
    const double alpha = 0.7213 / (1.0 + 1.079 / m);
    const double raw = alpha * m * m / sum;
    if (raw <= 2.5 * m && zeros > 0) return m * std::log(m / static_cast<double>(zeros));
    return raw;
}

namespace {

std::uint64_t id_hash(const std::string& s) { return splitmix64(fnv1a64(s)); }

}  // namespace

void DistinctCounter::add(const std::string& id) {
    if (hll_) {
        hll_->add_hash(id_hash(id));
        return;
    }
    exact_.insert(id);
    if (sketch_ && exact_.size() > kExactLimit) promote();
}

void DistinctCounter::promote() {
    hll_.emplace();
    for (const auto& id : exact_) hll_->add_hash(id_hash(id));
    exact_.clear();
}

void DistinctCounter::merge(const DistinctCounter& o) {
    if (o.hll_) {
        if (!hll_) promote();
        hll_->merge(*o.hll_);
        return;
    }
    for (const auto& id : o.exact_) add(id);
}

std::uint64_t DistinctCounter::count() const {
    if (hll_) return static_cast<std::uint64_t>(std::llround(hll_->estimate()));
    return exact_.size();
}

void CellAccumulator::add(const AisRecord& rec) {
    ++msg_count;
    lons.push_back(rec.lon);
    lats.push_back(rec.lat);
    if (rec.sog) sogs.push_back(*rec.sog);
    if (rec.cog) cogs.push_back(*rec.cog);
    vessels.add(rec.vessel_id);
}

void CellAccumulator::merge(CellAccumulator&& o) {
    msg_count += o.msg_count;
    lons.insert(lons.end(), o.lons.begin(), o.lons.end());
    lats.insert(lats.end(), o.lats.begin(), o.lats.end());
    sogs.insert(sogs.end(), o.sogs.begin(), o.sogs.end());
    cogs.insert(cogs.end(), o.cogs.begin(), o.cogs.end());
    vessels.merge(o.vessels);
}

CellStats CellAccumulator::finish(CellId cell) const {
    CellStats s;
    s.cell = cell;
    s.msg_count = msg_count;
    s.distinct_vessels = std::max<std::uint64_t>(1, std::min(vessels.count(), msg_count));
    s.median_lon = median(lons);
    s.median_lat = median(lats);
    if (!sogs.empty()) s.median_sog = median(sogs);
    if (!cogs.empty()) s.median_cog = circular_median_deg(cogs);
    return s;
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> chunks(std::size_t n, unsigned workers) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t parts = std::max<std::size_t>(1, std::min<std::size_t>(workers, n));
    for (std::size_t p = 0; p < parts; ++p) out.emplace_back(n * p / parts, n * (p + 1) / parts);
    return out;
}

}  // namespace

CellStatsMap aggregate_cells(const std::vector<Trip>& trips, int r, const AggregateOptions& opts) {
    const auto ranges = chunks(trips.size(), opts.workers);
    std::vector<std::map<CellId, CellAccumulator>> partial(ranges.size());
    parallel_for(ranges.size(), opts.workers, [&](std::size_t p) {
        auto& acc = partial[p];
        for (std::size_t t = ranges[p].first; t < ranges[p].second; ++t) {
            for (const auto& rec : trips[t].points) {
                const CellId c = assign_cell(rec.lat, rec.lon, r);
                acc.try_emplace(c, opts.approximate_distinct).first->second.add(rec);
            }
        }
    });

    std::map<CellId, CellAccumulator> merged;
    for (auto& part : partial) {
        for (auto& [cell, acc] : part) {
            auto [it, inserted] = merged.try_emplace(cell, opts.approximate_distinct);
            it->second.merge(std::move(acc));
        }
    }

    CellStatsMap out;
    for (const auto& [cell, acc] : merged) out.emplace(cell, acc.finish(cell));
    return out;
}

TransitionMap aggregate_transitions(const std::vector<Trip>& trips, int r, unsigned workers) {
    const auto ranges = chunks(trips.size(), workers);
    std::vector<std::map<TransitionKey, std::uint64_t>> partial(ranges.size());
    parallel_for(ranges.size(), workers, [&](std::size_t p) {
        for (std::size_t t = ranges[p].first; t < ranges[p].second; ++t) {
            std::set<TransitionKey> seen;
            CellId prev = 0;
            bool has_prev = false;
            for (const auto& rec : trips[t].points) {
                const CellId c = assign_cell(rec.lat, rec.lon, r);
                if (has_prev && c != prev) seen.emplace(prev, c);
                prev = c;
                has_prev = true;
            }
            for (const auto& key : seen) ++partial[p][key];
        }
    });

    TransitionMap out;
    for (const auto& part : partial) {
        for (const auto& [key, count] : part) {
            auto [it, inserted] = out.try_emplace(key);
            if (inserted) {
                it->second.from = key.first;
                it->second.to = key.second;
            }
            it->second.trip_count += count;
        }
    }
    std::vector<TransitionStats*> slots;
    slots.reserve(out.size());
    for (auto& [key, ts] : out) slots.push_back(&ts);
    parallel_for(slots.size(), workers, [&](std::size_t i) {
        slots[i]->grid_dist = transition_grid_distance(slots[i]->from, slots[i]->to);
    });
    return out;
}

}  // namespace habit

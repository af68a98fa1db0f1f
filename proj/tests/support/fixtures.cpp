#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "habit/geo.hpp"
#include "habit/h3_aggregator.hpp"
#include "habit/traffic_graph.hpp"

namespace fixtures {

using habit::geo::kEarthRadiusM;
using habit::geo::kPi;

habit::GeoPoint to_geo(XY p, double lat0, double lon0) {
    const double lat = lat0 + habit::geo::to_deg(p.y / kEarthRadiusM);
    const double lon = lon0 + habit::geo::to_deg(p.x / (kEarthRadiusM * std::cos(habit::geo::to_rad(lat0))));
    return {lon, lat, std::nullopt};
}

std::vector<XY> straight_centerline(double length_m) {
    std::vector<XY> out;
    const int n = static_cast<int>(length_m / 10.0);
    for (int i = 0; i <= n; ++i) out.push_back({length_m * i / n, 0.0});
    return out;
}

std::vector<XY> sine_centerline(double length_m, double amplitude_m, double wavelength_m, double meander_m,
                                double meander_wavelength_m) {
    std::vector<XY> out;
    const int n = static_cast<int>(length_m / 10.0);
    for (int i = 0; i <= n; ++i) {
        const double x = length_m * i / n;
        out.push_back({x, amplitude_m * std::sin(2.0 * kPi * x / wavelength_m) +
                              meander_m * std::sin(2.0 * kPi * x / meander_wavelength_m)});
    }
    return out;
}

std::vector<XY> arc_centerline(double radius_m, double start_deg, double end_deg) {
    std::vector<XY> out;
    const double sweep = std::fabs(end_deg - start_deg) * kPi / 180.0 * radius_m;
    const int n = std::max(2, static_cast<int>(sweep / 10.0));
    for (int i = 0; i <= n; ++i) {
        const double a = (start_deg + (end_deg - start_deg) * i / n) * kPi / 180.0;
        out.push_back({radius_m * std::cos(a), radius_m * std::sin(a)});
    }
    return out;
}

std::vector<XY> offset_centerline(std::vector<XY> line, double dx, double dy) {
    for (auto& p : line) {
        p.x += dx;
        p.y += dy;
    }
    return line;
}

namespace {

struct Arc {
    std::vector<XY> pts;
    std::vector<double> cum;

    explicit Arc(std::vector<XY> p) : pts(std::move(p)), cum(pts.size(), 0.0) {
        for (std::size_t i = 1; i < pts.size(); ++i) {
            cum[i] = cum[i - 1] + std::hypot(pts[i].x - pts[i - 1].x, pts[i].y - pts[i - 1].y);
        }
    }
    double length() const { return cum.back(); }

    // Position and unit normal at arc length s.
    std::pair<XY, XY> at(double s) const {
        s = std::clamp(s, 0.0, length());
        auto it = std::upper_bound(cum.begin(), cum.end(), s);
        std::size_t i = it == cum.end() ? pts.size() - 1 : static_cast<std::size_t>(it - cum.begin());
        i = std::max<std::size_t>(1, i);
        const XY a = pts[i - 1];
        const XY b = pts[i];
        const double seg = cum[i] - cum[i - 1];
        const double f = seg > 0 ? (s - cum[i - 1]) / seg : 0.0;
        const double dx = b.x - a.x;
        const double dy = b.y - a.y;
        const double len = std::hypot(dx, dy);
        return {{a.x + f * dx, a.y + f * dy}, {-dy / len, dx / len}};
    }
};

}  // namespace

std::vector<habit::Trip> make_trips(const std::vector<XY>& centerline, const TrafficSpec& spec) {
    const Arc arc(centerline);
    std::mt19937_64 rng(spec.seed);
    std::normal_distribution<double> lateral(0.0, spec.lateral_sigma_m);
    std::normal_distribution<double> jitter(0.0, spec.jitter_m);
    std::uniform_real_distribution<double> speed(spec.speed_min_kn, spec.speed_max_kn);
    std::uniform_real_distribution<double> dt_jitter(-spec.sample_jitter_s, spec.sample_jitter_s);

    std::vector<habit::Trip> trips;
    for (int k = 0; k < spec.trips; ++k) {
        const bool reverse = spec.both_directions && (k % 2 == 1);
        const double off = lateral(rng);
        const double v_ms = speed(rng) * 1852.0 / 3600.0;
        habit::Trip t;
        t.vessel_id = spec.vessel_prefix + std::to_string(k);
        std::int64_t ts = spec.t0_ms + static_cast<std::int64_t>(k) * 3'600'000;
        double s = 0.0;
        for (;;) {
            const double along = reverse ? arc.length() - s : s;
            const auto [p, nrm] = arc.at(along);
            const XY q{p.x + nrm.x * off + jitter(rng), p.y + nrm.y * off + jitter(rng)};
            const habit::GeoPoint g = to_geo(q);
            habit::AisRecord r;
            r.vessel_id = t.vessel_id;
            r.ts = ts;
            r.lon = g.lon;
            r.lat = g.lat;
            r.sog = std::round(v_ms * 3600.0 / 1852.0 * 10.0) / 10.0;
            t.points.push_back(r);
            if (s >= arc.length()) break;
            const double dt = spec.sample_s + dt_jitter(rng);
            ts += static_cast<std::int64_t>(dt * 1000.0);
            s = std::min(arc.length(), s + v_ms * dt);
        }
        for (std::size_t i = 0; i + 1 < t.points.size(); ++i) {
            t.points[i].cog = habit::geo::bearing_deg(t.points[i].point(), t.points[i + 1].point());
        }
        t.points.back().cog = t.points[t.points.size() - 2].cog;
        t.trip_id = habit::make_trip_id(t.vessel_id, t.points.front().ts);
        trips.push_back(std::move(t));
    }
    return trips;
}

std::vector<habit::Trip> curved_corridor(std::uint64_t seed, double lateral_sigma_m) {
    TrafficSpec spec;
    spec.seed = seed;
    spec.lateral_sigma_m = lateral_sigma_m;
    spec.vessel_prefix = "C";
    return make_trips(sine_centerline(50'000.0, 1'500.0, 25'000.0, 300.0, 6'000.0), spec);
}

std::vector<habit::Trip> offset_lane(std::uint64_t seed) {
    TrafficSpec spec;
    spec.trips = 100;
    spec.seed = seed;
    spec.lateral_sigma_m = 30.0;
    spec.jitter_m = 15.0;
    spec.vessel_prefix = "O";
    return make_trips(straight_centerline(40'000.0), spec);
}

std::vector<habit::Trip> straight_corridor(std::uint64_t seed) {
    TrafficSpec spec;
    spec.seed = seed;
    spec.vessel_prefix = "S";
    return make_trips(straight_centerline(50'000.0), spec);
}

std::vector<habit::Trip> lane_lattice(int n, double spacing_m, int trips_per_lane, std::uint64_t seed) {
    std::vector<habit::Trip> out;
    const double extent = spacing_m * (n - 1);
    for (int i = 0; i < n; ++i) {
        for (int dir = 0; dir < 2; ++dir) {
            std::vector<XY> line;
            const int m = static_cast<int>(extent / 10.0);
            for (int j = 0; j <= m; ++j) {
                const double u = extent * j / m;
                line.push_back(dir == 0 ? XY{u, spacing_m * i} : XY{spacing_m * i, u});
            }
            TrafficSpec spec;
            spec.trips = trips_per_lane;
            spec.lateral_sigma_m = 80.0;
            spec.jitter_m = 20.0;
            spec.seed = seed * 1000 + static_cast<std::uint64_t>(i * 2 + dir);
            spec.vessel_prefix = "L" + std::to_string(i) + (dir == 0 ? "h" : "v") + "-";
            auto trips = make_trips(line, spec);
            for (auto& t : trips) out.push_back(std::move(t));
        }
    }
    return out;
}

std::vector<habit::AisRecord> flatten(const std::vector<habit::Trip>& trips) {
    std::vector<habit::AisRecord> out;
    for (const auto& t : trips) out.insert(out.end(), t.points.begin(), t.points.end());
    return out;
}

habit::TrafficGraph graph_from_trips(const std::vector<habit::Trip>& trips, int r) {
    const auto kept = habit::filter_micro_trips(trips, r);
    return habit::build_graph(habit::aggregate_cells(kept, r), habit::aggregate_transitions(kept, r), r,
                              {"fixture", 0, kept.size(), 0});
}

}  // namespace fixtures

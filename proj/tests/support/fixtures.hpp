#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "habit/eval_harness.hpp"
#include "habit/trip_segmenter.hpp"

namespace fixtures {

// Local planar frame in meters around an origin; x east, y north.
struct XY {
    double x = 0.0;
    double y = 0.0;
};

inline constexpr double kOriginLat = 37.0;
inline constexpr double kOriginLon = 24.0;

habit::GeoPoint to_geo(XY p, double lat0 = kOriginLat, double lon0 = kOriginLon);

// Densely sampled centerlines.
std::vector<XY> straight_centerline(double length_m);
// Sum of two sinusoids along x: a broad bend plus shorter meanders.
std::vector<XY> sine_centerline(double length_m, double amplitude_m, double wavelength_m, double meander_m = 0.0,
                                double meander_wavelength_m = 1.0);
// Arc of the given radius sweeping from start_deg to end_deg (math angles).
std::vector<XY> arc_centerline(double radius_m, double start_deg, double end_deg);
std::vector<XY> offset_centerline(std::vector<XY> line, double dx, double dy);

struct TrafficSpec {
    int trips = 200;
    double lateral_sigma_m = 150.0;  // per-trip constant offset
    double jitter_m = 30.0;          // per-point noise
    double speed_min_kn = 4.5;
    double speed_max_kn = 6.0;
    double sample_s = 60.0;
    double sample_jitter_s = 10.0;
    bool both_directions = true;
    std::uint64_t seed = 1;
    std::string vessel_prefix = "V";
    std::int64_t t0_ms = 1'700'000'000'000;
};

// Trips travelling the full centerline, one vessel per trip.
std::vector<habit::Trip> make_trips(const std::vector<XY>& centerline, const TrafficSpec& spec);

// Curved corridor: 50 km with a 1.5 km bend every 25 km and 300 m meanders every 6 km,
// 200 trips both ways.
std::vector<habit::Trip> curved_corridor(std::uint64_t seed = 7, double lateral_sigma_m = 100.0);
// Narrow straight lane; cell centers sit off the traffic.
std::vector<habit::Trip> offset_lane(std::uint64_t seed = 13);
std::vector<habit::Trip> straight_corridor(std::uint64_t seed = 11);

// Grid of crossing lanes over an area (n x n lanes, spacing in meters).
std::vector<habit::Trip> lane_lattice(int n, double spacing_m, int trips_per_lane, std::uint64_t seed);

std::vector<habit::AisRecord> flatten(const std::vector<habit::Trip>& trips);

// Standard graph for a trip set at resolution r.
habit::TrafficGraph graph_from_trips(const std::vector<habit::Trip>& trips, int r);

}  // namespace fixtures

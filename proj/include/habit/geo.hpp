#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace habit {

// Position on the sphere; ts is UTC milliseconds since the epoch.
struct GeoPoint {
    double lon = 0.0;
    double lat = 0.0;
    std::optional<std::int64_t> ts;

    bool same_position(const GeoPoint& o) const { return lon == o.lon && lat == o.lat; }
    friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

namespace geo {

inline constexpr double kEarthRadiusM = 6371008.8;
inline constexpr double kMetersPerNm = 1852.0;
inline constexpr double kPi = 3.14159265358979323846;

inline double to_rad(double deg) { return deg * kPi / 180.0; }
inline double to_deg(double rad) { return rad * 180.0 / kPi; }

double haversine_m(double lat1, double lon1, double lat2, double lon2);
double haversine_m(const GeoPoint& a, const GeoPoint& b);

// Initial great-circle bearing from a to b, degrees in [0, 360).
double bearing_deg(const GeoPoint& a, const GeoPoint& b);

// Point at fraction f of the great-circle arc from a to b (ts left empty).
GeoPoint interpolate(const GeoPoint& a, const GeoPoint& b, double f);

// Point reached from p after dist_m along the initial bearing.
GeoPoint destination(const GeoPoint& p, double bearing_deg, double dist_m);

// Signed cross-track distance of p from the great circle through a and b.
double cross_track_m(const GeoPoint& p, const GeoPoint& a, const GeoPoint& b);

// Distance from p to the closest point of the great-circle segment [a, b].
double segment_distance_m(const GeoPoint& p, const GeoPoint& a, const GeoPoint& b);

// Speed in knots implied by moving between two timestamped points.
double implied_speed_knots(double dist_m, std::int64_t dt_ms);

double path_length_m(const std::vector<GeoPoint>& pts);

}  // namespace geo
}  // namespace habit

#include "habit/geo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace habit::geo {

double haversine_m(double lat1, double lon1, double lat2, double lon2) {
    const double p1 = to_rad(lat1);
    const double p2 = to_rad(lat2);
    const double dp = p2 - p1;
    const double dl = to_rad(lon2 - lon1);
    const double s1 = std::sin(dp / 2.0);
    const double s2 = std::sin(dl / 2.0);
    const double h = std::min(1.0, s1 * s1 + std::cos(p1) * std::cos(p2) * s2 * s2);
    return 2.0 * kEarthRadiusM * std::asin(std::sqrt(h));
}

double haversine_m(const GeoPoint& a, const GeoPoint& b) {
    return haversine_m(a.lat, a.lon, b.lat, b.lon);
}

double bearing_deg(const GeoPoint& a, const GeoPoint& b) {
    const double p1 = to_rad(a.lat);
    const double p2 = to_rad(b.lat);
    const double dl = to_rad(b.lon - a.lon);
    const double y = std::sin(dl) * std::cos(p2);
    const double x = std::cos(p1) * std::sin(p2) - std::sin(p1) * std::cos(p2) * std::cos(dl);
    const double deg = to_deg(std::atan2(y, x));
    return std::fmod(deg + 360.0, 360.0);
}

GeoPoint interpolate(const GeoPoint& a, const GeoPoint& b, double f) {
    if (f <= 0.0) return {a.lon, a.lat, std::nullopt};
    if (f >= 1.0) return {b.lon, b.lat, std::nullopt};

    const double d = haversine_m(a, b) / kEarthRadiusM;
    if (d < 1e-15) return {a.lon, a.lat, std::nullopt};

    const double p1 = to_rad(a.lat);
    const double l1 = to_rad(a.lon);
    const double p2 = to_rad(b.lat);
    const double l2 = to_rad(b.lon);

    const double wa = std::sin((1.0 - f) * d) / std::sin(d);
    const double wb = std::sin(f * d) / std::sin(d);
    const double x = wa * std::cos(p1) * std::cos(l1) + wb * std::cos(p2) * std::cos(l2);
    const double y = wa * std::cos(p1) * std::sin(l1) + wb * std::cos(p2) * std::sin(l2);
    const double z = wa * std::sin(p1) + wb * std::sin(p2);

    return {to_deg(std::atan2(y, x)), to_deg(std::atan2(z, std::hypot(x, y))), std::nullopt};
}

GeoPoint destination(const GeoPoint& p, double brg, double dist_m) {
    const double d = dist_m / kEarthRadiusM;
    const double t = to_rad(brg);
    const double p1 = to_rad(p.lat);
    const double l1 = to_rad(p.lon);
    const double p2 = std::asin(std::sin(p1) * std::cos(d) + std::cos(p1) * std::sin(d) * std::cos(t));
    const double l2 = l1 + std::atan2(std::sin(t) * std::sin(d) * std::cos(p1),
                                      std::cos(d) - std::sin(p1) * std::sin(p2));
    double lon = std::fmod(to_deg(l2) + 540.0, 360.0) - 180.0;
    return {lon, to_deg(p2), std::nullopt};
}

double cross_track_m(const GeoPoint& p, const GeoPoint& a, const GeoPoint& b) {
    const double d13 = haversine_m(a, p) / kEarthRadiusM;
    const double t13 = to_rad(bearing_deg(a, p));
    const double t12 = to_rad(bearing_deg(a, b));
    return std::asin(std::sin(d13) * std::sin(t13 - t12)) * kEarthRadiusM;
}

double segment_distance_m(const GeoPoint& p, const GeoPoint& a, const GeoPoint& b) {
    const double d12 = haversine_m(a, b) / kEarthRadiusM;
    const double d13 = haversine_m(a, p) / kEarthRadiusM;
    if (d12 < 1e-15 || d13 < 1e-15) return d13 * kEarthRadiusM;

    const double dt = to_rad(bearing_deg(a, p)) - to_rad(bearing_deg(a, b));
    const double xt = std::asin(std::sin(d13) * std::sin(dt));
    const double at = std::atan2(std::sin(d13) * std::cos(dt), std::cos(d13));

    if (at >= 0.0 && at <= d12) return std::fabs(xt) * kEarthRadiusM;
    return std::min(d13 * kEarthRadiusM, haversine_m(b, p));
}

double implied_speed_knots(double dist_m, std::int64_t dt_ms) {
    if (dt_ms <= 0) return std::numeric_limits<double>::infinity();
    return (dist_m / kMetersPerNm) / (static_cast<double>(dt_ms) / 3'600'000.0);
}

double path_length_m(const std::vector<GeoPoint>& pts) {
    double total = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) total += haversine_m(pts[i - 1], pts[i]);
    return total;
}

}  // namespace habit::geo

#include <set>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "habit/eval_harness.hpp"
#include "habit/geo.hpp"

using namespace habit;

namespace {

Trip timed_trip(const std::string& id, int minutes, int step_s = 60) {
    Trip t{id, "v-" + id, {}};
    GeoPoint p{12.0, 55.0, std::nullopt};
    for (int s = 0; s <= minutes * 60; s += step_s) {
        t.points.push_back({t.vessel_id, 1'700'000'000'000 + s * 1000LL, p.lon, p.lat, 10.0, 90.0});
        p = geo::destination(p, 90.0, 10.0 * geo::kMetersPerNm / 3600.0 * step_s);
    }
    return t;
}

std::vector<Trip> numbered(int n) {
    std::vector<Trip> out;
    for (int i = 0; i < n; ++i) out.push_back(timed_trip("t" + std::to_string(i), 10));
    return out;
}

GeoPoint ll(double lat, double lon) { return {lon, lat, std::nullopt}; }

}  // namespace

TEST_CASE("split_trips") {
    const auto trips = numbered(10);
    const auto [train, test] = split_trips(trips, 0.7, 42);
    CHECK(train.size() == 7);
    CHECK(test.size() == 3);
    const auto again = split_trips(trips, 0.7, 42);
    CHECK(again.first == train);
    CHECK(again.second == test);

    std::set<std::string> ids;
    for (const auto& t : train) ids.insert(t.trip_id);
    for (const auto& t : test) ids.insert(t.trip_id);
    CHECK(ids.size() == 10);

    bool differs = false;
    for (std::uint64_t s = 1; s < 10 && !differs; ++s) differs = split_trips(trips, 0.7, s).first != train;
    CHECK(differs);
}

TEST_CASE("inject_gap partitions the trip") {
    const Trip t = timed_trip("long", 180);
    const auto gc = inject_gap(t, 60, 7);
    REQUIRE(gc);
    CHECK(inject_gap(t, 60, 7)->removed == gc->removed);
    const std::size_t after = gc->first_removed + gc->removed.size();
    std::vector<AisRecord> joined(t.points.begin(), t.points.begin() + static_cast<std::ptrdiff_t>(gc->first_removed));
    joined.insert(joined.end(), gc->removed.begin(), gc->removed.end());
    joined.insert(joined.end(), t.points.begin() + static_cast<std::ptrdiff_t>(after), t.points.end());
    CHECK(joined == t.points);
    CHECK(gc->gap.start == t.points[gc->first_removed - 1].point());
    CHECK(gc->gap.end == t.points[after].point());
    CHECK(*gc->gap.end.ts - *gc->gap.start.ts >= 60 * 60'000);
    CHECK(gc->truth_path().size() == gc->removed.size() + 2);

    CHECK_FALSE(inject_gap(timed_trip("short", 30), 60, 7).has_value());
}

TEST_CASE("resample_path") {
    const GeoPoint a = ll(55.0, 12.0);
    const GeoPoint b = geo::destination(a, 90.0, 1000.0);
    const auto r = resample_path({a, b}, 250.0);
    REQUIRE(r.size() == 5);
    CHECK(geo::haversine_m(r[1], a) == doctest::Approx(250.0).epsilon(1e-6));
    const std::vector<GeoPoint> dense{a, geo::destination(a, 90.0, 100.0), geo::destination(a, 90.0, 200.0)};
    CHECK(resample_path(dense, 250.0) == dense);
}

TEST_CASE("dtw") {
    const std::vector<GeoPoint> a{ll(0.0, 0.0), ll(0.0, 0.01)};
    const std::vector<GeoPoint> b{ll(0.001, 0.0), ll(0.001, 0.01)};
    CHECK(dtw(a, a) == 0.0);
    CHECK(dtw(a, b) == doctest::Approx(111.19508023353292).epsilon(1e-9));
    CHECK(dtw(a, b) == dtw(b, a));
    const GeoPoint p = ll(55.0, 12.0);
    CHECK(dtw({p}, {geo::destination(p, 45.0, 500.0)}) == doctest::Approx(500.0).epsilon(1e-9));
    CHECK_THROWS(dtw({}, a));
}

TEST_CASE("turn_stats") {
    using fixtures::XY;
    auto path = [](std::vector<XY> xy) {
        std::vector<GeoPoint> out;
        for (const auto& p : xy) out.push_back(fixtures::to_geo(p));
        return out;
    };
    const auto straight = turn_stats(path({{0, 0}, {1000, 0}, {2000, 0}}));
    CHECK(straight.cnt == 3);
    CHECK(*straight.max_rot_deg == doctest::Approx(0.0).epsilon(1e-3));
    CHECK(straight.n_gt45 == 0u);

    const auto dogleg = turn_stats(path({{0, 0}, {1000, 0}, {1000, 1000}}));
    CHECK(*dogleg.max_rot_deg == doctest::Approx(90.0).epsilon(1e-3));
    CHECK(dogleg.n_gt45 == 1u);

    const auto uturn = turn_stats(path({{0, 0}, {1000, 0}, {0, 0}}));
    CHECK(*uturn.max_rot_deg == doctest::Approx(180.0).epsilon(1e-4));

    const auto two = turn_stats(path({{0, 0}, {1000, 0}}));
    CHECK(two.cnt == 2);
    CHECK_FALSE(two.avg_rot_deg.has_value());
    CHECK_FALSE(two.n_gt45.has_value());
}

TEST_CASE("run_benchmark on straight traffic") {
    EvalConfig cfg;
    cfg.gap_minutes = {60};
    const auto rep = run_benchmark(fixtures::straight_corridor(), cfg);
    CHECK(rep.train_trips + rep.test_trips == 200);
    REQUIRE(rep.summary("sli") != nullptr);
    REQUIRE(rep.summary("habit-r9-t250-w") != nullptr);
    CHECK(rep.summary("sli")->mean_dtw_m < cfg.resample_spacing_m / 2);
    CHECK(rep.summary("sli")->cases == rep.gap_cases);
    CHECK(rep.graphs.size() == 1);
    CHECK(rep.graphs[0].storage_bytes > 0);

    const auto again = run_benchmark(fixtures::straight_corridor(), cfg);
    CHECK(report_to_json(rep, false) == report_to_json(again, false));

    std::ostringstream txt;
    write_report_text(rep, txt);
    CHECK(txt.str().find("habit-r9-t250-w") != std::string::npos);
    std::ostringstream csv;
    write_cases_csv(rep, csv);
    CHECK(csv.str().rfind("trip_id,gap_minutes,method,config,dtw_m", 0) == 0);
}

TEST_CASE("run_benchmark with only short trips skips every case") {
    EvalConfig cfg;
    const auto rep = run_benchmark(numbered(20), cfg);
    CHECK(rep.gap_cases == 0);
    CHECK(rep.skipped.at(60) == rep.test_trips);
    CHECK(rep.cases.empty());
}

TEST_CASE("config validation") {
    EvalConfig cfg;
    cfg.split_ratio = 1.5;
    CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("split_ratio"), std::invalid_argument);
}

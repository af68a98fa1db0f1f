#include "habit/cli.hpp"

#include <fmt/format.h>

#include <chrono>
#include <fstream>
#include <set>

#include "habit/geojson.hpp"
#include "habit/io.hpp"
#include "habit/util.hpp"

namespace habit::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& msg) {
    throw ConfigError(fmt::format("config: {}: {}", field, msg));
}

// Typed access to one JSON object, rejecting keys outside `allowed`.
class Section {
public:
    Section(const json& j, std::string path, std::set<std::string> allowed) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) fail(path_.empty() ? "<root>" : path_, "expected an object");
        for (const auto& [k, v] : j_.items()) {
            if (allowed.count(k) == 0) fail(field(k), "unknown key");
        }
    }

    std::string field(const std::string& k) const { return path_.empty() ? k : path_ + "." + k; }
    bool has(const std::string& k) const { return j_.contains(k); }
    const json& raw(const std::string& k) const { return j_.at(k); }

    template <typename T>
    void get(const std::string& k, T& dst) const {
        if (!has(k)) return;
        const json& v = j_.at(k);
        try {
            if constexpr (std::is_same_v<T, bool>) {
                if (!v.is_boolean()) throw std::runtime_error("expected a boolean");
            } else if constexpr (std::is_arithmetic_v<T>) {
                if (!v.is_number()) throw std::runtime_error("expected a number");
                if constexpr (std::is_integral_v<T>) {
                    if (!v.is_number_integer()) throw std::runtime_error("expected an integer");
                    if constexpr (std::is_unsigned_v<T>) {
                        if (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0) {
                            throw std::runtime_error("expected a non-negative integer");
                        }
                    }
                }
            } else if constexpr (std::is_same_v<T, std::string>) {
                if (!v.is_string()) throw std::runtime_error("expected a string");
            }
            dst = v.get<T>();
        } catch (const std::exception& e) {
            fail(field(k), e.what());
        }
    }

private:
    const json& j_;
    std::string path_;
};

template <typename E, typename Parse>
void get_enum(const Section& s, const std::string& k, E& dst, Parse parse, const char* choices) {
    std::string text;
    s.get(k, text);
    if (!s.has(k)) return;
    const auto v = parse(text);
    if (!v) fail(s.field(k), fmt::format("'{}' is not one of {}", text, choices));
    dst = *v;
}

void parse_impute(const Section& s, ImputeConfig& ic) {
    get_enum(s, "projection", ic.projection, parse_projection, "c, w");
    s.get("tolerance", ic.tolerance_m);
    get_enum(s, "cost_mode", ic.cost_mode, parse_cost_mode, "hops, inverse-frequency");
    s.get("k_max", ic.k_max);
    get_enum(s, "fallback", ic.fallback, parse_fallback, "error, straight-line");
    s.get("sli_spacing", ic.sli_spacing_m);
}

const std::set<std::string> kImputeKeys{"projection", "tolerance", "cost_mode", "k_max", "fallback", "sli_spacing"};

std::string habit_label(int r, const ImputeConfig& ic) {
    return fmt::format("habit-r{}-t{}-{}{}", r, ic.tolerance_m, to_string(ic.projection),
                       ic.cost_mode == CostMode::Hops ? "" : "-invfreq");
}

void write_json(const fs::path& p, const json& j) {
    std::ofstream out(p);
    if (!out) throw std::runtime_error(fmt::format("cannot write {}", p.string()));
    out << j.dump(2) << '\n';
}

std::vector<Trip> load_trips(const RunConfig& cfg) {
    std::ifstream in(cfg.trips_path());
    if (!in) throw std::runtime_error(fmt::format("cannot open trips file {}", cfg.trips_path().string()));
    return read_trips_csv(in);
}

}  // namespace

void RunConfig::validate() const {
    auto wrap = [](auto&& fn) {
        try {
            fn();
        } catch (const std::invalid_argument& e) {
            throw ConfigError(fmt::format("config: {}", e.what()));
        }
    };
    if (resolution < 0 || resolution > h3::kMaxResolution) {
        fail("resolution", fmt::format("must be in [0, 15] (got {})", resolution));
    }
    wrap([&] { segmenter.validate(); });
    wrap([&] { impute.validate(); });
    wrap([&] { eval.validate(); });
    for (const auto& p : inputs) {
        if (p.empty()) fail("inputs", "empty path");
    }
}

RunConfig parse_run_config(const json& doc, RunConfig cfg) {
    const Section root(doc, "",
                       {"inputs", "schema", "segmenter", "resolution", "imputer", "eval", "seed", "workers",
                        "approximate_distinct", "out", "trips", "graph", "gaps", "gap_time_format"});
    if (root.has("inputs")) {
        const json& in = root.raw("inputs");
        if (!in.is_array()) fail("inputs", "expected an array of paths");
        cfg.inputs.clear();
        for (const auto& p : in) {
            if (!p.is_string()) fail("inputs", "expected an array of paths");
            cfg.inputs.emplace_back(p.get<std::string>());
        }
    }
    if (root.has("schema")) {
        const Section s(root.raw("schema"), "schema",
                        {"vessel_id", "ts", "lon", "lat", "sog", "cog", "delimiter", "time_format"});
        s.get("vessel_id", cfg.schema.vessel_id);
        s.get("ts", cfg.schema.ts);
        s.get("lon", cfg.schema.lon);
        s.get("lat", cfg.schema.lat);
        s.get("sog", cfg.schema.sog);
        s.get("cog", cfg.schema.cog);
        std::string delim(1, cfg.schema.delimiter);
        s.get("delimiter", delim);
        if (delim == "\\t") delim = "\t";
        if (delim.size() != 1) fail("schema.delimiter", "must be a single character");
        cfg.schema.delimiter = delim[0];
        get_enum(s, "time_format", cfg.schema.time_format, parse_time_format, "iso8601, epoch_s, epoch_ms, dmy");
    }
    if (root.has("segmenter")) {
        const Section s(root.raw("segmenter"), "segmenter",
                        {"stop_speed_knots", "min_stop_duration_s", "gap_threshold_s", "max_plausible_speed_knots"});
        s.get("stop_speed_knots", cfg.segmenter.stop_speed_knots);
        s.get("min_stop_duration_s", cfg.segmenter.min_stop_duration_s);
        s.get("gap_threshold_s", cfg.segmenter.gap_threshold_s);
        s.get("max_plausible_speed_knots", cfg.segmenter.max_plausible_speed_knots);
    }
    root.get("resolution", cfg.resolution);
    if (root.has("imputer")) parse_impute(Section(root.raw("imputer"), "imputer", kImputeKeys), cfg.impute);
    if (root.has("eval")) {
        const Section s(root.raw("eval"), "eval",
                        {"split_ratio", "gap_durations", "resample_spacing", "sequential_timing", "methods"});
        s.get("split_ratio", cfg.eval.split_ratio);
        s.get("gap_durations", cfg.eval.gap_minutes);
        s.get("resample_spacing", cfg.eval.resample_spacing_m);
        s.get("sequential_timing", cfg.eval.sequential_timing);
        if (s.has("methods")) {
            const json& ms = s.raw("methods");
            if (!ms.is_array()) fail("eval.methods", "expected an array");
            cfg.eval.methods.clear();
            for (std::size_t i = 0; i < ms.size(); ++i) {
                std::set<std::string> keys = kImputeKeys;
                keys.insert({"label", "kind", "resolution"});
                const Section m(ms[i], fmt::format("eval.methods[{}]", i), keys);
                MethodSpec spec;
                spec.resolution = cfg.resolution;
                spec.impute = cfg.impute;
                std::string kind = "habit";
                m.get("kind", kind);
                if (kind == "sli") {
                    spec.kind = MethodSpec::Kind::Sli;
                } else if (kind != "habit") {
                    fail(m.field("kind"), fmt::format("'{}' is not one of habit, sli", kind));
                }
                m.get("resolution", spec.resolution);
                parse_impute(m, spec.impute);
                spec.label = spec.kind == MethodSpec::Kind::Sli ? "sli" : habit_label(spec.resolution, spec.impute);
                m.get("label", spec.label);
                cfg.eval.methods.push_back(std::move(spec));
            }
        }
    }
    root.get("seed", cfg.seed);
    root.get("workers", cfg.workers);
    root.get("approximate_distinct", cfg.approximate_distinct);
    std::string path;
    if (root.has("out")) {
        root.get("out", path);
        cfg.out = path;
    }
    if (root.has("trips")) {
        root.get("trips", path);
        cfg.trips = path;
    }
    if (root.has("graph")) {
        root.get("graph", path);
        cfg.graph = path;
    }
    if (root.has("gaps")) {
        root.get("gaps", path);
        cfg.gaps = path;
    }
    get_enum(root, "gap_time_format", cfg.gap_time_format, parse_time_format, "iso8601, epoch_s, epoch_ms, dmy");
    return cfg;
}

RunConfig load_run_config(const fs::path& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw ConfigError(fmt::format("config: cannot open {}", path.string()));
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(fmt::format("config: {} is not valid JSON: {}", path.string(), e.what()));
    }
    return parse_run_config(doc, std::move(base));
}

std::vector<MethodSpec> effective_methods(const RunConfig& cfg) {
    if (!cfg.eval.methods.empty()) return cfg.eval.methods;
    MethodSpec habit;
    habit.kind = MethodSpec::Kind::Habit;
    habit.resolution = cfg.resolution;
    habit.impute = cfg.impute;
    habit.label = habit_label(cfg.resolution, cfg.impute);
    MethodSpec sli;
    sli.kind = MethodSpec::Kind::Sli;
    sli.label = "sli";
    sli.impute = cfg.impute;
    return {habit, sli};
}

int cmd_ingest(const RunConfig& cfg, std::ostream& log) {
    if (cfg.inputs.empty()) throw ConfigError("config: inputs: no input files given");
    Corpus corpus;
    try {
        corpus = read_corpus_files(cfg.inputs, cfg.schema);
    } catch (const ParseError& e) {
        throw ConfigError(fmt::format("config: schema: {}", e.what()));
    }
    const unsigned workers = resolve_workers(cfg.workers);
    const SegmentationResult seg = segment_corpus(corpus.records, cfg.segmenter, cfg.resolution, workers);

    fs::create_directories(cfg.out);
    {
        std::ofstream out(cfg.trips_path());
        if (!out) throw std::runtime_error(fmt::format("cannot write {}", cfg.trips_path().string()));
        write_trips_csv(seg.trips, out);
    }

    std::map<RejectReason, std::size_t> counts;
    for (const auto r : kAllRejectReasons) counts[r] = 0;
    for (const auto& r : seg.rejected) ++counts[r.reason];
    counts[RejectReason::MalformedField] += corpus.malformed.size();

    json by_reason = json::object();
    for (const auto& [r, n] : counts) by_reason[std::string(to_string(r))] = n;
    json malformed = json::array();
    for (const auto& e : corpus.malformed) {
        malformed.push_back({{"source", e.source}, {"line", e.line}, {"message", e.message}});
    }
    std::size_t in_trips = 0;
    for (const auto& t : seg.trips) in_trips += t.points.size();
    const json report = {{"rows_read", corpus.records.size() + corpus.malformed.size()},
                         {"rejected", by_reason},
                         {"malformed_rows", malformed},
                         {"trips", seg.trips.size()},
                         {"records_in_trips", in_trips},
                         {"micro_trips_removed", seg.micro_trips_removed}};
    write_json(cfg.out / "rejections.json", report);
    log << fmt::format("ingest: {} rows, {} rejected, {} trips ({} records) -> {}\n",
                       corpus.records.size() + corpus.malformed.size(), seg.rejected.size() + corpus.malformed.size(),
                       seg.trips.size(), in_trips, cfg.trips_path().string());
    return 0;
}

int cmd_build(const RunConfig& cfg, std::ostream& log) {
    const auto trips = load_trips(cfg);
    const unsigned workers = resolve_workers(cfg.workers);
    const auto cells = aggregate_cells(trips, cfg.resolution, {cfg.approximate_distinct, workers});
    const auto trans = aggregate_transitions(trips, cfg.resolution, workers);
    std::uint64_t records = 0;
    for (const auto& t : trips) records += t.points.size();
    const auto now = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::system_clock::now().time_since_epoch())
                         .count();
    const TrafficGraph g = build_graph(cells, trans, cfg.resolution,
                                       {cfg.trips_path().filename().string(), records, trips.size(), now});
    if (g.empty()) log << "warning: empty graph (no transitions in the trips input)\n";
    const auto path = cfg.graph_path();
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    save_graph(g, path);
    log << fmt::format("build: r={} nodes={} edges={} bytes={} -> {}\n", g.resolution(), g.node_count(),
                       g.edge_count(), fs::file_size(path), path.string());
    return 0;
}

int cmd_impute(const RunConfig& cfg, std::ostream& log) {
    if (!cfg.gaps) throw ConfigError("config: gaps: no gaps file given");
    const TrafficGraph g = load_graph(cfg.graph_path());
    std::ifstream in(*cfg.gaps);
    if (!in) throw std::runtime_error(fmt::format("cannot open gaps file {}", cfg.gaps->string()));
    const auto gaps = read_gaps_csv(in, cfg.gap_time_format);

    std::vector<json> features(gaps.size());
    parallel_for(gaps.size(), resolve_workers(cfg.workers), [&](std::size_t i) {
        try {
            features[i] = geojson::imputed_feature(gaps[i], impute_gap(g, gaps[i], cfg.impute));
        } catch (const std::exception& e) {
            features[i] = geojson::error_feature(gaps[i], e.what());
        }
    });
    std::size_t errors = 0;
    std::size_t fallbacks = 0;
    for (const auto& f : features) {
        if (f["properties"].contains("error")) ++errors;
        if (f["properties"].value("fallback_used", false)) ++fallbacks;
    }
    fs::create_directories(cfg.out);
    write_json(cfg.out / "imputed.geojson", geojson::feature_collection(json(features)));
    log << fmt::format("impute: {} gaps, {} fallbacks, {} errors -> {}\n", gaps.size(), fallbacks, errors,
                       (cfg.out / "imputed.geojson").string());
    return 0;
}

int cmd_eval(const RunConfig& cfg, std::ostream& log) {
    const auto trips = load_trips(cfg);
    EvalConfig ec = cfg.eval;
    ec.seed = cfg.seed;
    ec.workers = resolve_workers(cfg.workers);
    ec.methods = effective_methods(cfg);
    const EvalReport rep = run_benchmark(trips, ec);

    fs::create_directories(cfg.out);
    write_json(cfg.out / "eval_report.json", report_to_json(rep));
    {
        std::ofstream txt(cfg.out / "eval_report.txt");
        write_report_text(rep, txt);
        std::ofstream csv(cfg.out / "eval_cases.csv");
        write_cases_csv(rep, csv);
        if (!txt || !csv) throw std::runtime_error("cannot write eval reports");
    }
    write_report_text(rep, log);
    return 0;
}

int cmd_export_geojson(const RunConfig& cfg, std::ostream& log) {
    const TrafficGraph g = load_graph(cfg.graph_path());
    fs::create_directories(cfg.out);
    write_json(cfg.out / "cells.geojson", geojson::graph_cells(g));
    log << fmt::format("export-geojson: {} cells -> {}\n", g.node_count(), (cfg.out / "cells.geojson").string());
    return 0;
}

}  // namespace habit::cli

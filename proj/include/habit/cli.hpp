#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "habit/eval_harness.hpp"
#include "json.hpp"

namespace habit::cli {

namespace fs = std::filesystem;

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::vector<fs::path> inputs;
    Schema schema;
    SegmenterConfig segmenter;
    int resolution = 9;
    ImputeConfig impute;
    EvalConfig eval;  // methods empty = derive from resolution/impute
    std::uint64_t seed = 42;
    unsigned workers = 0;  // 0 = available parallelism
    bool approximate_distinct = false;
    fs::path out = "out";
    std::optional<fs::path> trips;  // default <out>/trips.csv
    std::optional<fs::path> graph;  // default <out>/graph.hbtg
    std::optional<fs::path> gaps;
    TimeFormat gap_time_format = TimeFormat::Iso8601;

    fs::path trips_path() const { return trips ? *trips : out / "trips.csv"; }
    fs::path graph_path() const { return graph ? *graph : out / "graph.hbtg"; }

    // Throws ConfigError naming the offending field.
    void validate() const;
};

// Unknown keys and ill-typed values throw ConfigError with the field path.
RunConfig parse_run_config(const nlohmann::json& doc, RunConfig base = {});
RunConfig load_run_config(const fs::path& path, RunConfig base = {});

// Methods evaluated by cmd_eval: the configured list, or HABIT at the run's
// resolution and imputer settings plus SLI.
std::vector<MethodSpec> effective_methods(const RunConfig& cfg);

// Each command returns a process exit code and writes progress to `log`.
int cmd_ingest(const RunConfig& cfg, std::ostream& log);
int cmd_build(const RunConfig& cfg, std::ostream& log);
int cmd_impute(const RunConfig& cfg, std::ostream& log);
int cmd_eval(const RunConfig& cfg, std::ostream& log);
int cmd_export_geojson(const RunConfig& cfg, std::ostream& log);

}  // namespace habit::cli

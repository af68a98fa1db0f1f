#include <fmt/format.h>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "habit/cli.hpp"

namespace {

struct Flags {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<int> resolution;
    std::optional<double> tolerance;
    std::string projection;
    std::string cost_mode;
    std::optional<unsigned> workers;
    std::string out;
    std::vector<std::string> inputs;
    std::string trips;
    std::string graph;
    std::string gaps;
};

void add_shared(CLI::App* cmd, Flags& f) {
    cmd->add_option("--config", f.config, "JSON run configuration");
    cmd->add_option("--seed", f.seed, "random seed");
    cmd->add_option("--resolution", f.resolution, "H3 resolution r")->check(CLI::Range(0, 15));
    cmd->add_option("--tolerance", f.tolerance, "RDP tolerance t in meters");
    cmd->add_option("--projection", f.projection, "cell projection p")->check(CLI::IsMember({"c", "w"}));
    cmd->add_option("--cost-mode", f.cost_mode, "path cost")->check(CLI::IsMember({"hops", "inverse-frequency"}));
    cmd->add_option("--workers", f.workers, "worker threads (0 = all cores)");
    cmd->add_option("--out", f.out, "output directory");
}

habit::cli::RunConfig resolve(const Flags& f) {
    using namespace habit;
    cli::RunConfig cfg;
    if (!f.config.empty()) cfg = cli::load_run_config(f.config);
    if (f.seed) cfg.seed = *f.seed;
    if (f.resolution) cfg.resolution = *f.resolution;
    if (f.tolerance) cfg.impute.tolerance_m = *f.tolerance;
    if (!f.projection.empty()) cfg.impute.projection = *parse_projection(f.projection);
    if (!f.cost_mode.empty()) cfg.impute.cost_mode = *parse_cost_mode(f.cost_mode);
    if (f.workers) cfg.workers = *f.workers;
    if (!f.out.empty()) cfg.out = f.out;
    if (!f.inputs.empty()) cfg.inputs.assign(f.inputs.begin(), f.inputs.end());
    if (!f.trips.empty()) cfg.trips = f.trips;
    if (!f.graph.empty()) cfg.graph = f.graph;
    if (!f.gaps.empty()) cfg.gaps = f.gaps;
    cfg.validate();
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vessel trajectory gap imputation over H3 traffic graphs"};
    app.require_subcommand(1);
    Flags f;

    auto* ingest = app.add_subcommand("ingest", "clean and segment raw AIS files into trips");
    add_shared(ingest, f);
    ingest->add_option("--input", f.inputs, "raw AIS file (repeatable)");

    auto* build = app.add_subcommand("build", "aggregate trips and write the traffic graph");
    add_shared(build, f);
    build->add_option("--trips", f.trips, "trips file");
    build->add_option("--graph", f.graph, "graph output path");

    auto* impute = app.add_subcommand("impute", "impute gaps against a graph");
    add_shared(impute, f);
    impute->add_option("--graph", f.graph, "graph file");
    impute->add_option("--gaps", f.gaps, "gaps file");

    auto* eval = app.add_subcommand("eval", "run the evaluation protocol");
    add_shared(eval, f);
    eval->add_option("--trips", f.trips, "trips file");

    auto* exportgj = app.add_subcommand("export-geojson", "write graph cells as GeoJSON polygons");
    add_shared(exportgj, f);
    exportgj->add_option("--graph", f.graph, "graph file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const auto cfg = resolve(f);
        if (*ingest) return habit::cli::cmd_ingest(cfg, std::cout);
        if (*build) return habit::cli::cmd_build(cfg, std::cout);
        if (*impute) return habit::cli::cmd_impute(cfg, std::cout);
        if (*eval) return habit::cli::cmd_eval(cfg, std::cout);
        if (*exportgj) return habit::cli::cmd_export_geojson(cfg, std::cout);
    } catch (const habit::cli::ConfigError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

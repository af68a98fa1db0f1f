#include "habit/io.hpp"

#include <fmt/format.h>

#include <charconv>
#include <fstream>
#include <map>
#include <stdexcept>

namespace habit {

namespace {

bool blank(std::string_view s) { return s.find_first_not_of(" \t\r") == std::string_view::npos; }

void chomp(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

double parse_double(const std::string& s, const char* what) {
    double v = 0.0;
    const auto* b = s.data();
    const auto* e = s.data() + s.size();
    while (b < e && *b == ' ') ++b;
    const auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || ptr != e) throw ParseError(fmt::format("bad {} value '{}'", what, s));
    return v;
}

}  // namespace

void read_corpus(std::istream& in, const Schema& schema, const std::string& source, Corpus& out) {
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        chomp(line);
        if (!blank(line)) break;
    }
    if (lineno == 0 || blank(line)) return;
    const ColumnMap cols = resolve_schema(schema, line);
    while (std::getline(in, line)) {
        ++lineno;
        chomp(line);
        if (blank(line)) continue;
        try {
            out.records.push_back(parse_record(line, cols));
        } catch (const ParseError& e) {
            out.malformed.push_back({source, lineno, e.what()});
        }
    }
}

Corpus read_corpus_files(const std::vector<std::filesystem::path>& paths, const Schema& schema) {
    Corpus c;
    for (const auto& p : paths) {
        std::ifstream in(p);
        if (!in) throw std::runtime_error(fmt::format("cannot open input {}", p.string()));
        read_corpus(in, schema, p.string(), c);
    }
    return c;
}

void write_trips_csv(const std::vector<Trip>& trips, std::ostream& out) {
    out << "trip_id," << identity_header() << '\n';
    for (const auto& t : trips) {
        for (const auto& r : t.points) out << t.trip_id << ',' << serialize_record(r) << '\n';
    }
}

std::vector<Trip> read_trips_csv(std::istream& in) {
    std::vector<Trip> trips;
    std::string line;
    if (!std::getline(in, line)) return trips;
    chomp(line);
    if (line != "trip_id," + identity_header()) throw std::runtime_error("trips file: unexpected header");
    ColumnMap cols;
    cols.vessel_id = 1;
    cols.ts = 2;
    cols.lon = 3;
    cols.lat = 4;
    cols.sog = 5;
    cols.cog = 6;
    std::map<std::string, std::size_t> index;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        chomp(line);
        if (blank(line)) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw std::runtime_error(fmt::format("trips file line {}: no trip id", lineno));
        const std::string id = line.substr(0, comma);
        AisRecord rec;
        try {
            rec = parse_record(line, cols);
        } catch (const ParseError& e) {
            throw std::runtime_error(fmt::format("trips file line {}: {}", lineno, e.what()));
        }
        auto [it, inserted] = index.try_emplace(id, trips.size());
        if (inserted) {
            trips.push_back({id, rec.vessel_id, {}});
        }
        trips[it->second].points.push_back(std::move(rec));
    }
    return trips;
}

std::vector<Gap> read_gaps_csv(std::istream& in, TimeFormat tf, char delim) {
    std::vector<Gap> gaps;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        chomp(line);
        if (blank(line)) continue;
        const auto f = split_row(line, delim);
        if (lineno == 1 && !f.empty() && f[0] == "vessel_id") continue;
        if (f.size() != 7) throw std::runtime_error(fmt::format("gaps line {}: expected 7 fields, got {}", lineno, f.size()));
        try {
            Gap g;
            g.vessel_id = f[0];
            g.start = {parse_double(f[1], "start_lon"), parse_double(f[2], "start_lat"), parse_timestamp(f[3], tf)};
            g.end = {parse_double(f[4], "end_lon"), parse_double(f[5], "end_lat"), parse_timestamp(f[6], tf)};
            g.trip_id = fmt::format("gap-{}", gaps.size());
            gaps.push_back(std::move(g));
        } catch (const ParseError& e) {
            throw std::runtime_error(fmt::format("gaps line {}: {}", lineno, e.what()));
        }
    }
    return gaps;
}

}  // namespace habit

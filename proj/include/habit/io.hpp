#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "habit/imputer.hpp"
#include "habit/trip_segmenter.hpp"

namespace habit {

struct RowError {
    std::string source;
    std::size_t line = 0;
    std::string message;
};

struct Corpus {
    std::vector<AisRecord> records;
    std::vector<RowError> malformed;
};

// Reads a delimited file with a header row. Rows that fail to parse are
// collected, not thrown; a header missing a required column throws ParseError.
void read_corpus(std::istream& in, const Schema& schema, const std::string& source, Corpus& out);
Corpus read_corpus_files(const std::vector<std::filesystem::path>& paths, const Schema& schema);

// trip_id followed by the identity record columns.
void write_trips_csv(const std::vector<Trip>& trips, std::ostream& out);
std::vector<Trip> read_trips_csv(std::istream& in);

// Rows: vessel_id, start_lon, start_lat, start_ts, end_lon, end_lat, end_ts.
// A header row is optional; timestamps use `fmt`.
std::vector<Gap> read_gaps_csv(std::istream& in, TimeFormat fmt = TimeFormat::Iso8601, char delim = ',');

}  // namespace habit

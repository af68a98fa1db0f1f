#pragma once

// Hexagonal hierarchical grid indexing, bit-compatible with the published H3
// standard (cell mode indices, resolutions 0-15).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace habit::h3 {

using Cell = std::uint64_t;

inline constexpr int kMaxResolution = 15;
inline constexpr Cell kNullCell = 0;

struct LatLng {
    double lat;  // degrees
    double lng;  // degrees
};

bool is_valid_cell(Cell c);
int resolution(Cell c);
int base_cell(Cell c);
bool is_pentagon(Cell c);

// Throws std::invalid_argument for a resolution outside [0, 15] or a
// non-finite coordinate.
Cell lat_lng_to_cell(double lat_deg, double lng_deg, int res);

// Both throw std::invalid_argument on an invalid cell.
LatLng cell_to_lat_lng(Cell c);
std::vector<LatLng> cell_to_boundary(Cell c);

// Grid distance via local IJK unfolding. Empty when the cells are too far
// apart, at different resolutions, or separated by pentagon distortion.
std::optional<int> grid_distance(Cell a, Cell b);

// Cells sharing an edge with c (five for a pentagon, otherwise six).
std::vector<Cell> neighbors(Cell c);

// Cells at exactly k steps from c, sorted ascending.
std::vector<Cell> grid_ring(Cell c, int k);

// Cells within k steps of c, sorted ascending, c included.
std::vector<Cell> grid_disk(Cell c, int k);

Cell cell_to_parent(Cell c, int parent_res);

std::string to_string(Cell c);
// Returns kNullCell when the text is not a valid cell.
Cell from_string(std::string_view text);

}  // namespace habit::h3

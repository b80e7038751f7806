#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gaf/geometry.hpp"

namespace gaf {

struct FieldSpec {
  double width = 0.0;
  double height = 0.0;
  double radio_range = 0.0;  // R
};

enum class Scheme { gaf, hgaf, ehgaf, ehgaf_triangle, ehgaf_twotype };

std::string scheme_name(Scheme scheme);
Scheme scheme_from_name(const std::string& name);
std::vector<Scheme> all_schemes();

struct SchemeParams {
  Scheme scheme = Scheme::gaf;
  double r = 0.0;  // square cell edge; triangle cell height for ehgaf_triangle
  double d = 0.0;  // subcell edge; 0 encodes the infinitesimal-subcell limit
  int k = 0;       // type-B column period (ehgaf_twotype only)
};

enum class CellType { uniform, type_a, type_b };

struct Cell {
  int id = 0;
  int col = 0;
  int row = 0;
  CellShape shape;  // nominal shape; border cells may extend past the field
  CellType type = CellType::uniform;
};

struct Partition {
  FieldSpec field;
  SchemeParams params;
  Point grid_offset{0.0, 0.0};
  std::vector<Cell> cells;  // id == index, ordered by (col, row)
  std::vector<std::pair<int, int>> adjacency;  // required backbone links
  // lattice index of column 0 / row 0 (nonzero after boundary sliding and
  // for triangle tilings, whose leftmost slot starts at -1)
  int col_base = 0;
  int row_base = 0;

  const Cell& cell_at(int id) const;
  std::optional<int> find_cell(int col, int row) const;
  // cell shape clipped to the field; full cells return their own vertices
  Polygon clipped_polygon(int id) const;
  bool is_clipped(int id) const;

  std::unordered_map<long long, int> index;  // (col, row) -> id
};

// Throws std::invalid_argument on divisibility violations, k < 2, or
// non-positive dimensions.
void validate_params(const FieldSpec& field, const SchemeParams& params);

// q = r/d rounded to the nearest integer; 0 when d == 0.
int subcell_quotient(const SchemeParams& params);

// Number of rotation steps before the active-subcell schedule repeats:
// q^2 for hgaf with d > 0, otherwise 1.
long rotation_period(const SchemeParams& params);

Partition build_partition(const FieldSpec& field, const SchemeParams& params);

// Unique owning cell under the half-open convention. Throws
// std::out_of_range when p is outside the field.
int cell_of_point(const Partition& partition, Point p);

// Reference position of the active subcell for the given rotation step.
Point active_position(const Partition& partition, int cell_id, long round);

// Re-tiles the field with the grid shifted by ((epoch mod q)*d, (epoch mod
// q)*d). Only ehgaf and ehgaf_triangle with d > 0 slide.
Partition slide_boundaries(const Partition& partition, long epoch);

}  // namespace gaf

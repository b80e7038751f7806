#include "gaf/partition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gaf {

namespace {

constexpr double kRelTol = 1e-9;

long long cell_key(int col, int row) {
  return (static_cast<long long>(col) << 32) |
         static_cast<long long>(static_cast<unsigned int>(row));
}

// Smallest lattice index i whose cell [offset + i*size, offset + (i+1)*size)
// still overlaps (0, inf) by more than the tolerance.
int first_index(double offset, double size) {
  const double eps = kRelTol * size;
  return static_cast<int>(std::floor((eps - offset) / size));
}

// Largest lattice index i whose cell starts before `extent`.
int last_index(double offset, double size, double extent) {
  const double eps = kRelTol * size;
  return static_cast<int>(std::ceil((extent - eps - offset) / size)) - 1;
}

int checked_quotient(double r, double d) {
  const double q_real = r / d;
  const long long q = std::llround(q_real);
  if (q < 1 || std::abs(q_real - static_cast<double>(q)) >
                   kRelTol * std::max<double>(1.0, static_cast<double>(q))) {
    return 0;
  }
  return static_cast<int>(q);
}

Rect field_rect(const FieldSpec& field) {
  return Rect{{0.0, 0.0}, field.width, field.height};
}

void add_cell(Partition& p, int col, int row, CellShape shape, CellType type) {
  Cell cell;
  cell.id = static_cast<int>(p.cells.size());
  cell.col = col;
  cell.row = row;
  cell.shape = std::move(shape);
  cell.type = type;
  p.index.emplace(cell_key(col, row), cell.id);
  p.cells.push_back(std::move(cell));
}

void add_pair(Partition& p, int id_a, int id_b) {
  p.adjacency.emplace_back(id_a, id_b);
}

Partition build_square_grid(const FieldSpec& field, const SchemeParams& params,
                            Point offset) {
  const double r = params.r;
  Partition p;
  p.field = field;
  p.params = params;
  p.grid_offset = offset;

  const int i_min = first_index(offset.x, r);
  const int i_max = last_index(offset.x, r, field.width);
  const int j_min = first_index(offset.y, r);
  const int j_max = last_index(offset.y, r, field.height);
  p.col_base = i_min;
  p.row_base = j_min;

  for (int i = i_min; i <= i_max; ++i) {
    for (int j = j_min; j <= j_max; ++j) {
      const Point origin{offset.x + static_cast<double>(i) * r,
                         offset.y + static_cast<double>(j) * r};
      add_cell(p, i - i_min, j - j_min, Rect{origin, r, r}, CellType::uniform);
    }
  }
  const int n_rows = j_max - j_min + 1;
  for (const Cell& c : p.cells) {
    if (auto right = p.find_cell(c.col + 1, c.row)) add_pair(p, c.id, *right);
    if (c.row + 1 < n_rows) {
      if (auto up = p.find_cell(c.col, c.row + 1)) add_pair(p, c.id, *up);
    }
  }
  return p;
}

Partition build_triangle_grid(const FieldSpec& field,
                              const SchemeParams& params, Point offset) {
  const double h = params.r;  // triangle height
  const double base = 2.0 * h / std::sqrt(3.0);
  const double half = base / 2.0;
  Partition p;
  p.field = field;
  p.params = params;
  p.grid_offset = offset;

  // slot t spans [t*half, t*half + base); orientation alternates with t + j
  const double eps_x = kRelTol * base;
  const int t_min = static_cast<int>(
                        std::floor((eps_x - base - offset.x) / half)) +
                    1;
  const int t_max = last_index(offset.x, half, field.width);
  const int j_min = first_index(offset.y, h), j_max = last_index(offset.y, h, field.height);
  p.col_base = t_min;
  p.row_base = j_min;

  auto is_up = [](int t, int j) { return ((t + j) % 2 + 2) % 2 == 0; };
  auto slot_shape = [&](int t, int j) {
    const double x = offset.x + static_cast<double>(t) * half;
    if (is_up(t, j)) {
      return Triangle{{x, offset.y + static_cast<double>(j) * h}, base, true};
    }
    return Triangle{{x, offset.y + static_cast<double>(j + 1) * h}, base,
                    false};
  };

  const Rect fr = field_rect(field);
  for (int t = t_min; t <= t_max; ++t) {
    for (int j = j_min; j <= j_max; ++j) {
      const CellShape shape = slot_shape(t, j);
      const Polygon clip = clip_to_rect(shape_vertices(shape), fr);
      if (clip.size() < 3 || polygon_area(clip) <= 0.0) continue;
      add_cell(p, t - t_min, j - j_min, shape, CellType::uniform);
    }
  }
  for (const Cell& c : p.cells) {
    const int t = c.col + t_min;
    const int j = c.row + j_min;
    if (auto right = p.find_cell(c.col + 1, c.row)) add_pair(p, c.id, *right);
    if (!is_up(t, j)) {  // a downward cell shares its top edge with the row above
      if (auto up = p.find_cell(c.col, c.row + 1)) add_pair(p, c.id, *up);
    }
  }
  return p;
}

Partition build_two_type_grid(const FieldSpec& field,
                              const SchemeParams& params) {
  const double R = field.radio_range;
  const double h_a = std::sqrt(3.0) * R;
  const double h_b = h_a / 2.0;
  Partition p;
  p.field = field;
  p.params = params;

  const int n_cols = last_index(0.0, R, field.width) + 1;
  auto is_b_col = [&](int c) { return (c + 1) % params.k == 0; };
  auto rows_in_col = [&](int c) {
    if (is_b_col(c)) {
      // type-B tiling is phase-shifted by h_b/2 so that every second B-cell
      // center lines up with the type-A cell centers of adjacent columns
      return last_index(-h_b / 2.0, h_b, field.height) + 1;
    }
    return last_index(0.0, h_a, field.height) + 1;
  };

  for (int c = 0; c < n_cols; ++c) {
    const double x = static_cast<double>(c) * R;
    const int n_rows = rows_in_col(c);
    if (is_b_col(c)) {
      for (int j = 0; j < n_rows; ++j) {
        const double y = static_cast<double>(j) * h_b - h_b / 2.0;
        add_cell(p, c, j, Rect{{x, y}, R, h_b}, CellType::type_b);
      }
    } else {
      for (int m = 0; m < n_rows; ++m) {
        const double y = static_cast<double>(m) * h_a;
        add_cell(p, c, m, Rect{{x, y}, R, h_a}, CellType::type_a);
      }
    }
  }

  for (int c = 0; c < n_cols; ++c) {
    const bool b_here = is_b_col(c);
    // vertical links exist only inside type-B columns
    if (b_here) {
      const int n_rows = rows_in_col(c);
      for (int j = 0; j + 1 < n_rows; ++j) {
        add_pair(p, *p.find_cell(c, j), *p.find_cell(c, j + 1));
      }
    }
    if (c + 1 >= n_cols) continue;
    const bool b_next = is_b_col(c + 1);
    if (!b_here && !b_next) {
      const int n_rows = rows_in_col(c);
      for (int m = 0; m < n_rows; ++m) {
        add_pair(p, *p.find_cell(c, m), *p.find_cell(c + 1, m));
      }
    } else if (b_here != b_next) {
      // A-B links only between height-aligned centers (B row 2m+1)
      const int a_col = b_here ? c + 1 : c;
      const int b_col = b_here ? c : c + 1;
      const int a_rows = rows_in_col(a_col);
      for (int m = 0; m < a_rows; ++m) {
        if (auto b_id = p.find_cell(b_col, 2 * m + 1)) {
          add_pair(p, *p.find_cell(a_col, m), *b_id);
        }
      }
    }
    // two adjacent type-B columns would need k == 1, which is rejected
  }
  return p;
}

}  // namespace

std::string scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::gaf: return "gaf";
    case Scheme::hgaf: return "hgaf";
    case Scheme::ehgaf: return "ehgaf";
    case Scheme::ehgaf_triangle: return "ehgaf-triangle";
    case Scheme::ehgaf_twotype: return "ehgaf-twotype";
  }
  throw std::invalid_argument("unknown scheme value");
}

Scheme scheme_from_name(const std::string& name) {
  for (Scheme s : all_schemes()) {
    if (scheme_name(s) == name) return s;
  }
  throw std::invalid_argument(
      "unknown scheme '" + name +
      "' (expected gaf, hgaf, ehgaf, ehgaf-triangle or ehgaf-twotype)");
}

std::vector<Scheme> all_schemes() {
  return {Scheme::gaf, Scheme::hgaf, Scheme::ehgaf, Scheme::ehgaf_triangle,
          Scheme::ehgaf_twotype};
}

const Cell& Partition::cell_at(int id) const {
  if (id < 0 || id >= static_cast<int>(cells.size())) {
    throw std::out_of_range("no cell with id " + std::to_string(id));
  }
  return cells[static_cast<std::size_t>(id)];
}

std::optional<int> Partition::find_cell(int col, int row) const {
  const auto it = index.find(cell_key(col, row));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

Polygon Partition::clipped_polygon(int id) const {
  return clip_to_rect(shape_vertices(cell_at(id).shape), field_rect(field));
}

bool Partition::is_clipped(int id) const {
  const double eps =
      kRelTol * std::max({field.width, field.height, 1.0});
  for (const Point& v : shape_vertices(cell_at(id).shape)) {
    if (v.x < -eps || v.x > field.width + eps || v.y < -eps ||
        v.y > field.height + eps) {
      return true;
    }
  }
  return false;
}

void validate_params(const FieldSpec& field, const SchemeParams& params) {
  if (!(field.width > 0.0) || !(field.height > 0.0) ||
      !(field.radio_range > 0.0)) {
    throw std::invalid_argument("field width, height and radio range must be positive");
  }
  if (params.d < 0.0) throw std::invalid_argument("subcell edge d must be >= 0");

  switch (params.scheme) {
    case Scheme::gaf:
      if (!(params.r > 0.0)) throw std::invalid_argument("gaf: r must be positive");
      if (params.d != 0.0) throw std::invalid_argument("gaf: has no subcells, d must be 0");
      break;
    case Scheme::hgaf: {
      if (!(params.r > 0.0)) throw std::invalid_argument("hgaf: r must be positive");
      if (params.d != 0.0 && checked_quotient(params.r, params.d) == 0) {
        throw std::invalid_argument("hgaf: r must be divisible by d");
      }
      break;
    }
    case Scheme::ehgaf: {
      if (!(params.r > 0.0)) throw std::invalid_argument("ehgaf: r must be positive");
      if (params.d != 0.0) {
        const int q = checked_quotient(params.r, params.d);
        if (q == 0 || q % 2 == 0) {
          throw std::invalid_argument("ehgaf: r/d must be an odd integer");
        }
      }
      break;
    }
    case Scheme::ehgaf_triangle: {
      if (!(params.r > 0.0)) {
        throw std::invalid_argument("ehgaf-triangle: r must be positive");
      }
      if (params.d != 0.0) {
        const int q = checked_quotient(params.r, params.d);
        if (q < 4 || (q - 1) % 3 != 0) {
          throw std::invalid_argument(
              "ehgaf-triangle: r/d must be 3c+1 for a positive integer c");
        }
      }
      break;
    }
    case Scheme::ehgaf_twotype:
      if (params.k < 2) {
        throw std::invalid_argument("ehgaf-twotype: k must be an integer >= 2");
      }
      if (params.d != 0.0) {
        throw std::invalid_argument("ehgaf-twotype: d must be 0");
      }
      break;
  }
}

int subcell_quotient(const SchemeParams& params) {
  if (params.d == 0.0) return 0;
  return checked_quotient(params.r, params.d);
}

long rotation_period(const SchemeParams& params) {
  if (params.scheme == Scheme::hgaf && params.d > 0.0) {
    const long q = subcell_quotient(params);
    return q * q;
  }
  return 1;
}

Partition build_partition(const FieldSpec& field, const SchemeParams& params) {
  validate_params(field, params);
  switch (params.scheme) {
    case Scheme::gaf:
    case Scheme::hgaf:
    case Scheme::ehgaf:
      return build_square_grid(field, params, {0.0, 0.0});
    case Scheme::ehgaf_triangle:
      return build_triangle_grid(field, params, {0.0, 0.0});
    case Scheme::ehgaf_twotype:
      return build_two_type_grid(field, params);
  }
  throw std::invalid_argument("unknown scheme value");
}

int cell_of_point(const Partition& partition, Point p) {
  const FieldSpec& f = partition.field;
  if (!(p.x >= 0.0 && p.x < f.width && p.y >= 0.0 && p.y < f.height)) {
    throw std::out_of_range("point outside the field");
  }

  // Locate a lattice index so that origin(i) <= v < origin(i+1), with the
  // origins evaluated exactly as during construction.
  auto locate = [](double v, double offset, double size) {
    int i = static_cast<int>(std::floor((v - offset) / size));
    while (offset + static_cast<double>(i + 1) * size <= v) ++i;
    while (offset + static_cast<double>(i) * size > v) --i;
    return i;
  };

  const SchemeParams& params = partition.params;
  const Point o = partition.grid_offset;
  std::optional<int> id;

  switch (params.scheme) {
    case Scheme::gaf:
    case Scheme::hgaf:
    case Scheme::ehgaf: {
      const int i = locate(p.x, o.x, params.r);
      const int j = locate(p.y, o.y, params.r);
      id = partition.find_cell(i - partition.col_base, j - partition.row_base);
      break;
    }
    case Scheme::ehgaf_triangle: {
      const double h = params.r;
      const double half = h / std::sqrt(3.0);
      const int j = locate(p.y, o.y, h);
      const int tf = static_cast<int>(std::floor((p.x - o.x) / half));
      for (int t = tf - 2; t <= tf + 1 && !id; ++t) {
        const int col = t - partition.col_base;
        const int row = j - partition.row_base;
        const auto candidate = partition.find_cell(col, row);
        if (candidate &&
            point_in_shape(partition.cell_at(*candidate).shape, p)) {
          id = candidate;
        }
      }
      break;
    }
    case Scheme::ehgaf_twotype: {
      const double R = f.radio_range;
      const int c = locate(p.x, 0.0, R);
      const double h_a = std::sqrt(3.0) * R;
      const double h_b = h_a / 2.0;
      const bool b_col = (c + 1) % params.k == 0;
      const int row = b_col ? locate(p.y, -h_b / 2.0, h_b) : locate(p.y, 0.0, h_a);
      id = partition.find_cell(c, row);
      break;
    }
  }
  if (!id) throw std::out_of_range("point not covered by any cell");
  return *id;
}

Point active_position(const Partition& partition, int cell_id, long round) {
  if (round < 0) throw std::invalid_argument("round must be >= 0");
  const Cell& cell = partition.cell_at(cell_id);
  const SchemeParams& params = partition.params;

  Point canonical = shape_centroid(cell.shape);
  if (params.scheme == Scheme::hgaf && params.d > 0.0) {
    const long q = subcell_quotient(params);
    const long s = round % (q * q);  // row-major subcell schedule
    const auto& rect = std::get<Rect>(cell.shape);
    canonical = {rect.origin.x + (static_cast<double>(s % q) + 0.5) * params.d,
                 rect.origin.y + (static_cast<double>(s / q) + 0.5) * params.d};
  }

  if (partition.is_clipped(cell_id)) {
    const Polygon clip = partition.clipped_polygon(cell_id);
    const double eps = kRelTol *
        std::max({partition.field.width, partition.field.height, 1.0});
    if (!point_in_convex_polygon(clip, canonical, eps)) {
      canonical = polygon_centroid(clip);
    }
  }
  return canonical;
}

Partition slide_boundaries(const Partition& partition, long epoch) {
  const SchemeParams& params = partition.params;
  const bool slides = (params.scheme == Scheme::ehgaf ||
                       params.scheme == Scheme::ehgaf_triangle) &&
                      params.d > 0.0;
  if (!slides) {
    throw std::invalid_argument(
        "slide_boundaries: only ehgaf and ehgaf-triangle with d > 0 slide");
  }
  if (epoch < 0) throw std::invalid_argument("epoch must be >= 0");

  const long q = subcell_quotient(params);
  const double shift = static_cast<double>(epoch % q) * params.d;
  const Point offset{shift, shift};
  if (params.scheme == Scheme::ehgaf) {
    return build_square_grid(partition.field, params, offset);
  }
  return build_triangle_grid(partition.field, params, offset);
}

}  // namespace gaf

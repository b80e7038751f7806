#include "gaf/constraints.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace gaf {

namespace {

BindingConstraint classify(double req1, double req2, double limit,
                           double tol) {
  const bool tight1 = req1 >= limit * (1.0 - tol);
  const bool tight2 = req2 >= limit * (1.0 - tol);
  if (tight1 && tight2) return BindingConstraint::both;
  if (tight1) return BindingConstraint::req1;
  if (tight2) return BindingConstraint::req2;
  return BindingConstraint::none;
}

double max_pairwise(const Polygon& a, const Polygon& b) {
  double worst = 0.0;
  for (const Point& p : a) {
    for (const Point& q : b) {
      worst = std::max(worst, distance(p, q));
    }
  }
  return worst;
}

// Admissible active region of one cell for one rotation step, clipped to the
// field, returned as boundary samples (the farthest-point objectives are
// convex, so the boundary carries the maxima).
Polygon active_region_samples(const Partition& partition, int cell_id,
                              long step, double pitch) {
  const SchemeParams& params = partition.params;
  const Cell& cell = partition.cell_at(cell_id);
  const Rect field{{0.0, 0.0}, partition.field.width, partition.field.height};

  switch (params.scheme) {
    case Scheme::gaf:
      // the active node may be any node of the cell
      return boundary_samples(partition.clipped_polygon(cell_id), pitch);
    case Scheme::hgaf: {
      if (params.d == 0.0) return {};  // handled by the offset sweep below
      const long q = subcell_quotient(params);
      const long s = step % (q * q);
      const auto& rect = std::get<Rect>(cell.shape);
      const Rect sub{{rect.origin.x + static_cast<double>(s % q) * params.d,
                      rect.origin.y + static_cast<double>(s / q) * params.d},
                     params.d,
                     params.d};
      const Polygon clip = clip_to_rect(shape_vertices(CellShape{sub}), field);
      if (clip.size() < 3) return {};
      return boundary_samples(clip, pitch);
    }
    case Scheme::ehgaf: {
      if (params.d == 0.0) return {active_position(partition, cell_id, 0)};
      const Point c = shape_centroid(cell.shape);
      const Rect sub{{c.x - params.d / 2.0, c.y - params.d / 2.0}, params.d,
                     params.d};
      const Polygon clip = clip_to_rect(shape_vertices(CellShape{sub}), field);
      if (clip.size() < 3) return {};
      return boundary_samples(clip, pitch);
    }
    case Scheme::ehgaf_triangle: {
      if (params.d == 0.0) return {active_position(partition, cell_id, 0)};
      // central subcell: same-orientation triangle of height d whose
      // barycenter coincides with the cell barycenter
      const auto& tri = std::get<Triangle>(cell.shape);
      const Point c = shape_centroid(cell.shape);
      const double sub_base = 2.0 * params.d / std::sqrt(3.0);
      const Triangle sub{{c.x - sub_base / 2.0,
                          tri.up ? c.y - params.d / 3.0 : c.y + params.d / 3.0},
                         sub_base,
                         tri.up};
      const Polygon clip = clip_to_rect(shape_vertices(CellShape{sub}), field);
      if (clip.size() < 3) return {};
      return boundary_samples(clip, pitch);
    }
    case Scheme::ehgaf_twotype:
      return {active_position(partition, cell_id, 0)};
  }
  return {};
}

// hgaf with d == 0: the rotation schedule degenerates to one synchronized
// offset shared by all cells; sweeping the offset over a cell models the
// whole schedule.
WorstDistances sweep_degenerate_hgaf(const Partition& partition,
                                     double resolution,
                                     const std::vector<Polygon>& cell_samples) {
  const double r = partition.params.r;
  const Polygon offsets = boundary_samples(
      Polygon{{0.0, 0.0}, {r, 0.0}, {r, r}, {0.0, r}}, resolution);
  const double eps =
      kFeasibilityTol * std::max({partition.field.width, partition.field.height, 1.0});

  std::vector<Polygon> clips(partition.cells.size());
  for (const Cell& c : partition.cells) clips[c.id] = partition.clipped_polygon(c.id);

  WorstDistances out;
  std::vector<Point> active(partition.cells.size());
  std::vector<char> present(partition.cells.size(), 0);
  for (const Point& u : offsets) {
    for (const Cell& c : partition.cells) {
      const auto& rect = std::get<Rect>(c.shape);
      const Point a{rect.origin.x + u.x, rect.origin.y + u.y};
      present[c.id] = point_in_convex_polygon(clips[c.id], a, eps) ? 1 : 0;
      if (!present[c.id]) continue;
      active[c.id] = a;
      for (const Point& v : cell_samples[c.id]) {
        out.req2_worst = std::max(out.req2_worst, distance(a, v));
      }
    }
    for (const auto& [ia, ib] : partition.adjacency) {
      if (present[ia] && present[ib]) {
        out.req1_worst = std::max(out.req1_worst, distance(active[ia], active[ib]));
      }
    }
  }
  return out;
}

}  // namespace

std::string binding_name(BindingConstraint binding) {
  switch (binding) {
    case BindingConstraint::req1: return "ReqI";
    case BindingConstraint::req2: return "ReqII";
    case BindingConstraint::both: return "both";
    case BindingConstraint::none: return "none";
  }
  return "none";
}

double worst_adjacent_distance(const SchemeParams& params, double R) {
  if (!(R > 0.0)) throw std::invalid_argument("radio range must be positive");
  validate_params({1.0, 1.0, R}, params);
  switch (params.scheme) {
    case Scheme::gaf:
      return params.r * std::sqrt(5.0);
    case Scheme::hgaf:
    case Scheme::ehgaf:
      return std::sqrt(params.d * params.d +
                       (params.r + params.d) * (params.r + params.d));
    case Scheme::ehgaf_triangle:
      if (params.d != 0.0) {
        throw std::invalid_argument(
            "ehgaf-triangle worst-case formulas are defined for d = 0");
      }
      return 2.0 * params.r / 3.0;  // barycenters of edge-sharing triangles
    case Scheme::ehgaf_twotype:
      return R;  // width-R columns with height-aligned neighbors
  }
  throw std::invalid_argument("unknown scheme value");
}

double worst_intracell_distance(const SchemeParams& params, double R) {
  if (!(R > 0.0)) throw std::invalid_argument("radio range must be positive");
  validate_params({1.0, 1.0, R}, params);
  switch (params.scheme) {
    case Scheme::gaf:
    case Scheme::hgaf:
      return params.r * std::sqrt(2.0);  // corner to corner
    case Scheme::ehgaf:
      return std::sqrt(2.0) * (params.r + params.d) / 2.0;
    case Scheme::ehgaf_triangle:
      if (params.d != 0.0) {
        throw std::invalid_argument(
            "ehgaf-triangle worst-case formulas are defined for d = 0");
      }
      return 2.0 * params.r / 3.0;  // barycenter to vertex
    case Scheme::ehgaf_twotype: {
      const double h = std::sqrt(3.0) * R;  // type-A half-diagonal dominates
      return std::sqrt(h * h + R * R) / 2.0;
    }
  }
  throw std::invalid_argument("unknown scheme value");
}

WorstDistances brute_force_worst_distances(const Partition& partition,
                                           double resolution,
                                           long rounds_to_check) {
  if (!(resolution > 0.0)) {
    throw std::invalid_argument("resolution must be positive");
  }

  std::vector<Polygon> cell_samples(partition.cells.size());
  for (const Cell& c : partition.cells) {
    cell_samples[c.id] =
        boundary_samples(partition.clipped_polygon(c.id), resolution);
  }

  const SchemeParams& params = partition.params;
  if (params.scheme == Scheme::hgaf && params.d == 0.0) {
    return sweep_degenerate_hgaf(partition, resolution, cell_samples);
  }

  const long period = rotation_period(params);
  const long rounds = rounds_to_check <= 0
                          ? period
                          : std::min(rounds_to_check, period);

  WorstDistances out;
  std::vector<Polygon> regions(partition.cells.size());
  for (long step = 0; step < rounds; ++step) {
    for (const Cell& c : partition.cells) {
      regions[c.id] = active_region_samples(partition, c.id, step, resolution);
      double worst = 0.0;
      for (const Point& a : regions[c.id]) {
        for (const Point& v : cell_samples[c.id]) {
          worst = std::max(worst, distance(a, v));
        }
      }
      out.req2_worst = std::max(out.req2_worst, worst);
    }
    for (const auto& [ia, ib] : partition.adjacency) {
      if (regions[ia].empty() || regions[ib].empty()) continue;
      out.req1_worst =
          std::max(out.req1_worst, max_pairwise(regions[ia], regions[ib]));
    }
  }
  return out;
}

MaxCellDims max_cell_dims(Scheme scheme, double d, double R) {
  if (!(R > 0.0)) throw std::invalid_argument("radio range must be positive");
  if (d < 0.0) throw std::invalid_argument("d must be >= 0");

  switch (scheme) {
    case Scheme::gaf: {
      if (d != 0.0) throw std::invalid_argument("gaf has no subcells, d must be 0");
      const double r = R / std::sqrt(5.0);
      return {r, r * r, BindingConstraint::req1};
    }
    case Scheme::hgaf: {
      if (d >= R / std::sqrt(2.0)) {
        throw std::invalid_argument("hgaf: no feasible cell for this d");
      }
      const double by_req1 = std::sqrt(R * R - d * d) - d;
      const double by_req2 = R / std::sqrt(2.0);
      const double r = std::min(by_req1, by_req2);
      BindingConstraint binding = BindingConstraint::req2;
      if (std::abs(by_req1 - by_req2) <= kFeasibilityTol * R) {
        binding = BindingConstraint::both;
      } else if (by_req1 < by_req2) {
        binding = BindingConstraint::req1;
      }
      return {r, r * r, binding};
    }
    case Scheme::ehgaf: {
      if (d >= R / std::sqrt(2.0)) {
        throw std::invalid_argument("ehgaf: no feasible cell for this d");
      }
      const double r = std::sqrt(R * R - d * d) - d;  // always below sqrt(2)R - d
      return {r, r * r, BindingConstraint::req1};
    }
    case Scheme::ehgaf_triangle: {
      if (d != 0.0) {
        throw std::invalid_argument(
            "ehgaf-triangle maximal dimensions are defined for d = 0");
      }
      const double r = 1.5 * R;
      return {r, r * r / std::sqrt(3.0), BindingConstraint::both};
    }
    case Scheme::ehgaf_twotype: {
      if (d != 0.0) throw std::invalid_argument("ehgaf-twotype: d must be 0");
      const double r = std::sqrt(3.0) * R;  // type-A cell height
      return {r, std::sqrt(3.0) * R * R, BindingConstraint::both};
    }
  }
  throw std::invalid_argument("unknown scheme value");
}

ReqReport check_requirements(const Partition& partition,
                             const std::map<int, Point>& actives, double R) {
  if (!(R > 0.0)) throw std::invalid_argument("radio range must be positive");

  ReqReport report;
  report.params = partition.params;
  report.radio_range = R;

  for (const auto& [ia, ib] : partition.adjacency) {
    const auto a = actives.find(ia);
    const auto b = actives.find(ib);
    if (a == actives.end() || b == actives.end()) {
      throw std::invalid_argument(
          "check_requirements: missing active position for a cell in an "
          "adjacency pair");
    }
    report.req1_worst =
        std::max(report.req1_worst, distance(a->second, b->second));
  }

  for (const auto& [id, active] : actives) {
    // farthest cell point from a fixed position is a vertex of the
    // (clipped) cell polygon
    for (const Point& v : partition.clipped_polygon(id)) {
      report.req2_worst = std::max(report.req2_worst, distance(active, v));
    }
  }

  const double limit = R * (1.0 + kFeasibilityTol);
  report.feasible = report.req1_worst <= limit && report.req2_worst <= limit;
  report.binding =
      classify(report.req1_worst, report.req2_worst, R, kFeasibilityTol);
  return report;
}

}  // namespace gaf

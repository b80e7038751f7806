#include "gaf/energysim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace gaf {

namespace {

struct CellBins {
  std::vector<std::vector<int>> members;  // every node, by cell id
  std::vector<std::vector<int>> alive;    // alive node indices, by cell id
  int populated = 0;
};

CellBins bin_nodes(const Partition& partition,
                   const std::vector<NodeState>& nodes) {
  CellBins bins;
  bins.members.assign(partition.cells.size(), {});
  bins.alive.assign(partition.cells.size(), {});
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    const int cell = cell_of_point(partition, nodes[i].position);
    bins.members[cell].push_back(i);
    if (nodes[i].energy > 0.0) bins.alive[cell].push_back(i);
  }
  for (const auto& m : bins.members) {
    if (!m.empty()) ++bins.populated;
  }
  return bins;
}

// Connectivity of the cell-level backbone over populated cells that still
// hold an alive node; links are the partition adjacency restricted to edges
// whose canonical active positions are within radio range.
bool alive_backbone_connected(const Partition& partition,
                              const std::vector<char>& cell_alive,
                              const std::vector<std::pair<int, int>>& links) {
  const int n = static_cast<int>(partition.cells.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : links) {
    if (cell_alive[a] && cell_alive[b]) parent[find(a)] = find(b);
  }
  int components = 0;
  for (int i = 0; i < n; ++i) {
    if (cell_alive[i] && find(i) == i) ++components;
  }
  return components <= 1;
}

std::vector<std::pair<int, int>> in_range_links(const Partition& partition) {
  const double limit =
      partition.field.radio_range * (1.0 + kFeasibilityTol);
  std::vector<Point> canonical(partition.cells.size());
  for (const Cell& c : partition.cells) {
    canonical[c.id] = active_position(partition, c.id, 0);
  }
  std::vector<std::pair<int, int>> links;
  links.reserve(partition.adjacency.size());
  for (const auto& [a, b] : partition.adjacency) {
    if (distance(canonical[a], canonical[b]) <= limit) links.emplace_back(a, b);
  }
  return links;
}

}  // namespace

std::string lifetime_criterion_name(LifetimeCriterion criterion) {
  return criterion == LifetimeCriterion::first_cell_dead
             ? "first-cell-dead"
             : "backbone-disconnected";
}

LifetimeCriterion lifetime_criterion_from_name(const std::string& name) {
  if (name == "first-cell-dead") return LifetimeCriterion::first_cell_dead;
  if (name == "backbone-disconnected") {
    return LifetimeCriterion::backbone_disconnected;
  }
  throw std::invalid_argument("unknown lifetime criterion '" + name + "'");
}

std::vector<NodeState> place_nodes(const FieldSpec& field, int node_count,
                                   std::uint64_t seed, double initial_energy) {
  if (node_count < 1) {
    throw std::invalid_argument("place_nodes: node_count must be >= 1");
  }
  if (!(field.width > 0.0) || !(field.height > 0.0)) {
    throw std::invalid_argument("place_nodes: field must have positive size");
  }
  std::mt19937_64 eng(seed);
  std::vector<NodeState> nodes;
  nodes.reserve(static_cast<std::size_t>(node_count));
  for (int i = 0; i < node_count; ++i) {
    NodeState node;
    node.id = i;
    node.position = {uniform01(eng) * field.width,
                     uniform01(eng) * field.height};
    node.energy = initial_energy;
    node.role = NodeRole::sleeping;
    nodes.push_back(node);
  }
  return nodes;
}

SimResult run_simulation(const SimConfig& config) {
  if (!(config.e_active > config.e_sleep) || config.e_sleep < 0.0) {
    throw std::invalid_argument("run_simulation: need e_active > e_sleep >= 0");
  }
  if (config.node_count < 1) {
    throw std::invalid_argument("run_simulation: node_count must be >= 1");
  }
  if (config.epoch_length < 1) {
    throw std::invalid_argument("run_simulation: epoch_length must be >= 1");
  }
  if (!(config.initial_energy > 0.0)) {
    throw std::invalid_argument("run_simulation: initial_energy must be > 0");
  }
  validate_params(config.field, config.params);

  const Partition base = build_partition(config.field, config.params);
  const bool slides = (config.params.scheme == Scheme::ehgaf ||
                       config.params.scheme == Scheme::ehgaf_triangle) &&
                      config.params.d > 0.0;

  std::vector<NodeState> nodes =
      place_nodes(config.field, config.node_count, config.seed,
                  config.initial_energy);

  Partition current = base;
  CellBins bins = bin_nodes(current, nodes);
  std::vector<std::pair<int, int>> links = in_range_links(current);

  SimResult result;
  result.populated_cells = bins.populated;

  int alive_total = static_cast<int>(nodes.size());
  std::vector<char> cell_alive(current.cells.size());
  bool topology_dirty = true;

  long round = 0;
  long current_epoch = 0;
  for (;;) {
    const long epoch = round / config.epoch_length;
    if (slides && (epoch != current_epoch || round == 0)) {
      current = slide_boundaries(base, epoch);
      bins = bin_nodes(current, nodes);
      links = in_range_links(current);
      cell_alive.assign(current.cells.size(), 0);
      topology_dirty = true;
      current_epoch = epoch;
    }

    if (alive_total == 0) break;

    if (config.criterion == LifetimeCriterion::first_cell_dead) {
      bool dead_cell = false;
      for (std::size_t c = 0; c < bins.members.size(); ++c) {
        if (!bins.members[c].empty() && bins.alive[c].empty()) {
          dead_cell = true;
          break;
        }
      }
      if (dead_cell) break;
    } else {
      if (topology_dirty) {
        cell_alive.assign(current.cells.size(), 0);
        for (std::size_t c = 0; c < bins.alive.size(); ++c) {
          cell_alive[c] = bins.alive[c].empty() ? 0 : 1;
        }
        if (!alive_backbone_connected(current, cell_alive, links)) break;
        topology_dirty = false;
      }
    }

    // elect and drain
    int actives = 0;
    for (std::size_t c = 0; c < bins.alive.size(); ++c) {
      auto& alive = bins.alive[c];
      if (alive.empty()) continue;
      int best = alive[0];
      for (int idx : alive) {
        if (nodes[idx].energy > nodes[best].energy ||
            (nodes[idx].energy == nodes[best].energy &&
             nodes[idx].id < nodes[best].id)) {
          best = idx;
        }
      }
      ++actives;
      for (std::size_t slot = 0; slot < alive.size();) {
        const int idx = alive[slot];
        const bool is_active = idx == best;
        const double rate = is_active ? config.e_active : config.e_sleep;
        nodes[idx].role = is_active ? NodeRole::active : NodeRole::sleeping;
        if (is_active) {
          ++result.active_node_rounds;
        } else {
          ++result.sleep_node_rounds;
        }
        nodes[idx].energy = std::max(0.0, nodes[idx].energy - rate);
        if (nodes[idx].energy == 0.0) {
          nodes[idx].role = NodeRole::dead;
          alive[slot] = alive.back();
          alive.pop_back();
          --alive_total;
          topology_dirty = true;
        } else {
          ++slot;
        }
      }
    }
    result.active_counts.push_back(actives);
    ++round;
  }

  result.lifetime = round;
  if (round > 0) {
    const long long total = std::accumulate(result.active_counts.begin(),
                                            result.active_counts.end(), 0LL);
    result.mean_active_count =
        static_cast<double>(total) / static_cast<double>(round);
  }
  result.final_energies.reserve(nodes.size());
  for (const NodeState& node : nodes) {
    result.final_energies.push_back(node.energy);
  }
  return result;
}

std::vector<LifetimeRatioRow> lifetime_ratio_table(
    const std::vector<SchemeLifetimeRow>& rows, double bound_area) {
  if (rows.empty()) {
    throw std::invalid_argument("lifetime_ratio_table: no results given");
  }
  if (!(bound_area > 0.0)) {
    throw std::invalid_argument("lifetime_ratio_table: bound_area must be > 0");
  }

  // single proportionality factor lifetime ~= factor * cell_area
  double num = 0.0, den = 0.0;
  for (const SchemeLifetimeRow& row : rows) {
    num += row.median_lifetime * row.cell_area;
    den += row.cell_area * row.cell_area;
  }
  const double factor = den > 0.0 ? num / den : 0.0;

  std::vector<LifetimeRatioRow> out;
  for (const SchemeLifetimeRow& row : rows) {
    LifetimeRatioRow r;
    r.label = scheme_name(row.scheme);
    r.analytic_pct = 100.0 * row.cell_area / bound_area;
    r.empirical_pct = factor > 0.0
                          ? 100.0 * row.median_lifetime / (factor * bound_area)
                          : std::numeric_limits<double>::quiet_NaN();
    out.push_back(r);
  }
  out.push_back({"bound", 100.0, std::numeric_limits<double>::quiet_NaN()});
  return out;
}

}  // namespace gaf

#include "gaf/backbone.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace gaf {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    if (parent_[x] != x) parent_[x] = find(parent_[x]);
    return parent_[x];
  }

  void unite(int x, int y) {
    int px = find(x), py = find(y);
    if (px == py) return;
    if (rank_[px] < rank_[py]) std::swap(px, py);
    parent_[py] = px;
    if (rank_[px] == rank_[py]) ++rank_[px];
  }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

int count_components(const BackboneGraph& graph) {
  const int n = static_cast<int>(graph.vertices.size());
  if (n == 0) return 0;
  std::unordered_map<int, int> slot;
  slot.reserve(graph.vertices.size());
  for (int i = 0; i < n; ++i) slot.emplace(graph.vertices[i].cell_id, i);
  UnionFind uf(n);
  for (const BackboneEdge& e : graph.edges) {
    uf.unite(slot.at(e.cell_a), slot.at(e.cell_b));
  }
  int components = 0;
  for (int i = 0; i < n; ++i) {
    if (uf.find(i) == i) ++components;
  }
  return components;
}

}  // namespace

std::optional<int> elect_active(std::span<const NodeState> nodes_in_cell) {
  std::optional<int> best;
  double best_energy = 0.0;
  for (const NodeState& node : nodes_in_cell) {
    if (node.energy <= 0.0) continue;
    if (!best || node.energy > best_energy ||
        (node.energy == best_energy && node.id < *best)) {
      best = node.id;
      best_energy = node.energy;
    }
  }
  return best;
}

BackboneGraph build_backbone(const Partition& partition,
                             const std::map<int, ActivePlacement>& actives,
                             double R) {
  BackboneGraph graph;
  graph.vertices.reserve(actives.size());
  for (const auto& [cell_id, placement] : actives) {
    graph.vertices.push_back({cell_id, placement.node_id, placement.position});
  }

  const double limit = R * (1.0 + kFeasibilityTol);
  for (const auto& [ia, ib] : partition.adjacency) {
    const auto a = actives.find(ia);
    const auto b = actives.find(ib);
    if (a == actives.end() || b == actives.end()) continue;  // empty cell
    const double len = distance(a->second.position, b->second.position);
    if (len <= limit) {
      graph.edges.push_back({ia, ib, len});
    } else {
      graph.violations.push_back({ia, ib, len});
    }
  }
  graph.component_count = count_components(graph);
  return graph;
}

bool is_connected(const BackboneGraph& graph) {
  return count_components(graph) <= 1;
}

std::map<int, int> degree_histogram(const BackboneGraph& graph) {
  std::map<int, int> degree_of_cell;
  for (const BackboneVertex& v : graph.vertices) degree_of_cell[v.cell_id] = 0;
  for (const BackboneEdge& e : graph.edges) {
    ++degree_of_cell[e.cell_a];
    ++degree_of_cell[e.cell_b];
  }
  std::map<int, int> histogram;
  for (const auto& [cell, degree] : degree_of_cell) ++histogram[degree];
  return histogram;
}

}  // namespace gaf

#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "gaf/constraints.hpp"
#include "gaf/partition.hpp"

namespace gaf {

enum class NodeRole { active, sleeping, dead };

struct NodeState {
  int id = 0;
  Point position;
  double energy = 0.0;
  NodeRole role = NodeRole::sleeping;
};

// Alive node with maximum remaining energy, ties broken by smallest id;
// nullopt when the cell holds no alive node.
std::optional<int> elect_active(std::span<const NodeState> nodes_in_cell);

struct ActivePlacement {
  int node_id = 0;
  Point position;
};

struct BackboneVertex {
  int cell_id = 0;
  int node_id = 0;
  Point position;
};

struct BackboneEdge {
  int cell_a = 0;
  int cell_b = 0;
  double length = 0.0;
};

struct BackboneGraph {
  std::vector<BackboneVertex> vertices;
  std::vector<BackboneEdge> edges;       // links within radio range
  std::vector<BackboneEdge> violations;  // required links longer than R
  int component_count = 0;               // over violation-free edges
};

// Graph over the given actives whose edge set is the partition adjacency
// restricted to non-empty cells. Over-length links are recorded as
// violations, not dropped.
BackboneGraph build_backbone(const Partition& partition,
                             const std::map<int, ActivePlacement>& actives,
                             double R);

// True when the violation-free edges connect all vertices; empty and
// singleton graphs count as connected.
bool is_connected(const BackboneGraph& graph);

std::map<int, int> degree_histogram(const BackboneGraph& graph);

}  // namespace gaf

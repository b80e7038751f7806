#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gaf/backbone.hpp"
#include "gaf/partition.hpp"

namespace gaf {

enum class LifetimeCriterion { first_cell_dead, backbone_disconnected };

std::string lifetime_criterion_name(LifetimeCriterion criterion);
LifetimeCriterion lifetime_criterion_from_name(const std::string& name);

struct SimConfig {
  FieldSpec field;
  SchemeParams params;
  int node_count = 0;
  double initial_energy = 0.0;
  double e_active = 1.0;  // energy drained per round while active
  double e_sleep = 0.0;   // energy drained per round while sleeping
  std::uint64_t seed = 0;
  int epoch_length = 1;   // rounds per rotation/sliding epoch
  LifetimeCriterion criterion = LifetimeCriterion::first_cell_dead;
};

struct SimResult {
  long lifetime = 0;  // completed rounds before the criterion triggered
  double mean_active_count = 0.0;
  std::vector<int> active_counts;    // one entry per completed round
  std::vector<double> final_energies;  // by node id
  int populated_cells = 0;           // cells holding at least one node at start
  long long active_node_rounds = 0;  // nodes drained at the active rate
  long long sleep_node_rounds = 0;   // nodes drained at the sleep rate
};

// Uniform i.i.d. deployment over the field; deterministic per seed.
std::vector<NodeState> place_nodes(const FieldSpec& field, int node_count,
                                   std::uint64_t seed, double initial_energy);

// Discrete-round drain loop: slide/rotate at epoch boundaries, re-elect one
// active per cell each round, drain per role, stop when the lifetime
// criterion triggers. Deterministic per seed.
SimResult run_simulation(const SimConfig& config);

struct SchemeLifetimeRow {
  Scheme scheme = Scheme::gaf;
  double cell_area = 0.0;       // maximal cell area used by the scheme
  double median_lifetime = 0.0;
};

struct LifetimeRatioRow {
  std::string label;
  double analytic_pct = 0.0;   // cell_area / bound_area * 100
  double empirical_pct = 0.0;  // lifetime under a shared proportionality fit
};

// Reproduces the lifetime comparison table: the analytic column from the
// cell areas, the empirical column from the simulated lifetimes normalized
// by a single least-squares lifetime-per-area factor. Ends with the
// theoretical-bound row.
std::vector<LifetimeRatioRow> lifetime_ratio_table(
    const std::vector<SchemeLifetimeRow>& rows, double bound_area);

}  // namespace gaf

#pragma once

#include <map>
#include <string>

#include "gaf/partition.hpp"

namespace gaf {

// Relative tolerance used for all comparisons against the radio range R;
// edges of length exactly R count as feasible.
inline constexpr double kFeasibilityTol = 1e-9;

enum class BindingConstraint { req1, req2, both, none };

std::string binding_name(BindingConstraint binding);

struct ReqReport {
  SchemeParams params;
  double radio_range = 0.0;
  double req1_worst = 0.0;  // worst adjacent-active distance
  double req2_worst = 0.0;  // worst active-to-cell-point distance
  bool feasible = false;
  BindingConstraint binding = BindingConstraint::none;
};

// Analytic worst-case distance between active nodes of cells that are
// required to be linked.
double worst_adjacent_distance(const SchemeParams& params, double R);

// Analytic worst-case distance between an active node and any node of its
// own cell.
double worst_intracell_distance(const SchemeParams& params, double R);

struct WorstDistances {
  double req1_worst = 0.0;
  double req2_worst = 0.0;
};

// Sampling oracle for the two analytic formulas: cell boundaries and the
// admissible active regions are swept on a grid of pitch <= resolution, over
// every checked rotation step (0 = one full period). Results are at most the
// analytic values and at least analytic - 2*resolution*sqrt(2).
WorstDistances brute_force_worst_distances(const Partition& partition,
                                           double resolution,
                                           long rounds_to_check = 0);

struct MaxCellDims {
  double r_max = 0.0;
  double cell_area = 0.0;
  BindingConstraint binding = BindingConstraint::none;
};

// Largest r satisfying both requirements for the given subcell edge d, the
// resulting cell area, and which requirement binds.
MaxCellDims max_cell_dims(Scheme scheme, double d, double R);

// Evaluates both requirements for concrete active positions (one per cell).
ReqReport check_requirements(const Partition& partition,
                             const std::map<int, Point>& actives, double R);

}  // namespace gaf

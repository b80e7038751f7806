#pragma once

#include <cstdint>

#include "gaf/partition.hpp"

namespace gaf {

// Minimum overlap area forced by one backbone link: the lens of two radius-R
// discs whose centers are R apart, (4*pi - 3*sqrt(3))/6 * R^2.
double delta(double R);

// Largest field area coverable by n cells: n*pi*R^2 - (n-1)*delta(R).
double chain_max_area(int n, double R);

// Largest average cell area for n cells: pi*R^2 - ((n-1)/n)*delta(R);
// tends to pi*R^2 - delta(R) as n grows.
double avg_cell_bound(int n, double R);

// Maximal cell area per scheme (the two-cell-type value is the asymptotic
// type-A area).
double scheme_max_area(Scheme scheme, double R);

enum class GafAltShape { triangle, hexagon };

// Maximal cell area for plain gaf when the square cells are replaced by
// triangles or hexagons; closed-form constants.
double gaf_alt_shape_area(GafAltShape shape, double R);

// Average cell area of the two-cell-type layout with one type-B column per
// period of k columns: sqrt(3)*k*R^2 / (k+1).
double two_type_avg_area(int k, double R);

struct ChainVerification {
  int n = 0;
  double spacing = 0.0;
  double analytic = 0.0;       // chain_max_area(n, R)
  double estimate = 0.0;       // Monte Carlo union area of the chain
  double std_error = 0.0;
  bool pass = false;           // |estimate - analytic| <= 3 * std_error
  double increment_analytic = 0.0;  // pi*R^2 - delta(R)
  double increment_estimate = 0.0;  // estimate(n) - estimate(n-1)
  double increment_std_error = 0.0;
  bool increment_pass = false;
};

// Checks by Monte Carlo that the extremal chain of n cells attains the
// analytic maximum and that each added cell contributes pi*R^2 - delta.
// `spacing` defaults to R, the extremal center distance.
ChainVerification verify_chain_construction(int n, double R,
                                            std::int64_t samples,
                                            std::uint64_t seed,
                                            double spacing = -1.0);

}  // namespace gaf

#include "gaf/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gaf/geometry.hpp"

namespace gaf {

namespace {
constexpr double kPi = std::numbers::pi;
}

double delta(double R) {
  if (!(R > 0.0)) throw std::invalid_argument("delta: R must be positive");
  return (4.0 * kPi - 3.0 * std::sqrt(3.0)) / 6.0 * R * R;
}

double chain_max_area(int n, double R) {
  if (n < 1) throw std::invalid_argument("chain_max_area: n must be >= 1");
  return static_cast<double>(n) * kPi * R * R -
         static_cast<double>(n - 1) * delta(R);
}

double avg_cell_bound(int n, double R) {
  if (n < 1) throw std::invalid_argument("avg_cell_bound: n must be >= 1");
  return kPi * R * R -
         static_cast<double>(n - 1) / static_cast<double>(n) * delta(R);
}

double scheme_max_area(Scheme scheme, double R) {
  if (!(R > 0.0)) {
    throw std::invalid_argument("scheme_max_area: R must be positive");
  }
  const double r2 = R * R;
  switch (scheme) {
    case Scheme::gaf: return r2 / 5.0;
    case Scheme::hgaf: return r2 / 2.0;
    case Scheme::ehgaf: return r2;
    case Scheme::ehgaf_triangle: return 3.0 * std::sqrt(3.0) / 4.0 * r2;
    case Scheme::ehgaf_twotype: return std::sqrt(3.0) * r2;
  }
  throw std::invalid_argument("unknown scheme value");
}

double gaf_alt_shape_area(GafAltShape shape, double R) {
  if (!(R > 0.0)) {
    throw std::invalid_argument("gaf_alt_shape_area: R must be positive");
  }
  switch (shape) {
    case GafAltShape::triangle: return R * R / (4.0 * std::sqrt(3.0));
    case GafAltShape::hexagon: return 3.0 * std::sqrt(3.0) / 26.0 * R * R;
  }
  throw std::invalid_argument("unknown shape value");
}

double two_type_avg_area(int k, double R) {
  if (k < 2) throw std::invalid_argument("two_type_avg_area: k must be >= 2");
  return std::sqrt(3.0) * static_cast<double>(k) * R * R /
         static_cast<double>(k + 1);
}

ChainVerification verify_chain_construction(int n, double R,
                                            std::int64_t samples,
                                            std::uint64_t seed,
                                            double spacing) {
  if (n < 2) {
    throw std::invalid_argument("verify_chain_construction: n must be >= 2");
  }
  if (spacing < 0.0) spacing = R;

  ChainVerification report;
  report.n = n;
  report.spacing = spacing;
  report.analytic = chain_max_area(n, R);
  report.estimate = chain_union_area_mc(n, spacing, R, samples, seed);
  report.std_error =
      chain_union_area_mc_stderr(n, spacing, R, samples, report.estimate);
  report.pass =
      std::abs(report.estimate - report.analytic) <= 3.0 * report.std_error;

  // independent run for the (n-1)-cell chain
  const std::uint64_t prev_seed =
      seed ^ (0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(n));
  const double prev =
      chain_union_area_mc(n - 1, spacing, R, samples, prev_seed);
  const double prev_se =
      chain_union_area_mc_stderr(n - 1, spacing, R, samples, prev);

  report.increment_analytic = kPi * R * R - delta(R);
  report.increment_estimate = report.estimate - prev;
  report.increment_std_error = std::sqrt(report.std_error * report.std_error +
                                         prev_se * prev_se);
  report.increment_pass =
      std::abs(report.increment_estimate - report.increment_analytic) <=
      3.0 * report.increment_std_error;
  return report;
}

}  // namespace gaf

#pragma once

#include <cstdint>
#include <functional>

namespace spherelevels {

struct QuadratureOptions {
  double tol = 1e-10;                    // absolute
  std::int64_t max_intervals = 1000000;  // subdivision budget
  int initial_panels = 64;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::int64_t intervals = 0;
};

/// Adaptive Simpson integration of f over [a, b] to absolute tolerance.
/// The range is first split into `initial_panels` uniform panels, each
/// receiving a share of the tolerance proportional to its width. Throws
/// ConvergenceError when the subdivision budget runs out.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a,
                                  double b, const QuadratureOptions& options = {});

}  // namespace spherelevels

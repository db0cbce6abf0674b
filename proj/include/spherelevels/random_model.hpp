#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "spherelevels/sphere_core.hpp"

namespace spherelevels {

inline constexpr double kDefaultQuadratureTol = 1e-10;
inline constexpr double kDefaultOperationBudget = 1e10;

/// Gamma((d+1)/2) / (sqrt(pi) Gamma(d/2)).
double rho(int d);

/// a (a+1) ... (a+b-1); throws OverflowError past 64 bits.
std::uint64_t rising_factorial(std::uint64_t a, std::uint64_t b);

/// log of the rising factorial for real a > 0.
double log_rising_factorial(double a, double b);

/// Integral of t^a (1-t)^b over [0, 1] = a! b! / (a+b+1)!.
double beta_moment(int a, int b);

double log_binomial(int n, int k);

/// Probability that exactly k of n random great-(d-1)-spheres cross the
/// geodesic arc from a random point to the south pole of S^d.
double qk_exact(int n, int k, int d, double tol = kDefaultQuadratureTol);

struct QkBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Closed-form lower and upper bounds on q_k, valid for 0 <= k <= n/2.
/// Throws RangeError outside that range.
QkBounds qk_bounds(int n, int k, int d);

struct QkRow {
  int k = 0;
  double q_exact = 0.0;
  std::optional<double> q_lower;
  std::optional<double> q_upper;
  std::optional<double> q_mc;
  std::optional<double> stderr_mc;
};

struct QkTable {
  int d = 2;
  int n = 0;
  std::vector<QkRow> rows;
};

struct McQk {
  int n = 0;
  int d = 2;
  std::uint64_t samples = 0;
  std::vector<std::uint64_t> counts;  // index k in [0, n]

  double q_hat(int k) const;
  double stderr_of(int k) const;
};

struct McOptions {
  std::uint64_t samples = 0;
  RandomSeed seed{};
  int chunks = 1;
  bool parallel = true;
};

McQk mc_qk(int n, int d, const McOptions& options);

/// q_exact for k = 0..kmax with bounds where 2k <= n and optional
/// Monte Carlo columns.
QkTable qk_table(int n, int d, int kmax, double tol, const McQk* mc = nullptr);

struct LevelEstimate {
  int d = 2;
  int m = 0;
  int k = 0;
  double mc_mean = 0.0;
  double mc_stderr = 0.0;
  double analytic = 0.0;

  double ratio() const;  // mc_mean / (k+1)^(d-1)
};

struct LevelEstimates {
  int d = 2;
  int m = 0;
  int kmax = 0;
  std::uint64_t samples = 0;
  std::vector<LevelEstimate> rows;  // k = 0..kmax
  // Mass beyond kmax, if any.
  std::optional<LevelEstimate> overflow;
};

struct McLevelOptions {
  std::uint64_t samples = 0;
  RandomSeed seed{};
  int chunks = 1;
  std::optional<int> kmax;
  double tol = kDefaultQuadratureTol;
  double budget = kDefaultOperationBudget;
  bool parallel = true;
};

/// Expected k-level size in random arrangements of m spheres on S^d, by
/// Monte Carlo over all 2 C(m, d) vertices, next to the analytic value
/// 2 C(m, d) q_k(m - d); 0 outside [0, m - d].
LevelEstimates mc_level(int m, int d, const McLevelOptions& options);

/// 2 C(m, d) q_k(m - d); 0 outside [0, m - d].
double analytic_level(int m, int d, int k, double tol = kDefaultQuadratureTol);

/// Envelope implied by the q_k bounds for the ratio E|V_k| / (k+1)^(d-1),
/// valid for k <= (m-d)/2.
QkBounds level_ratio_envelope(int m, int d, int k);

}  // namespace spherelevels

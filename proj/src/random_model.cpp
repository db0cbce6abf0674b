#include "spherelevels/random_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "spherelevels/errors.hpp"
#include "spherelevels/kernels.hpp"
#include "spherelevels/quadrature.hpp"

namespace spherelevels {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

double rho(int d) {
  if (d < 1) throw PreconditionError("rho requires d >= 1");
  return std::exp(std::lgamma(0.5 * (d + 1)) - std::lgamma(0.5 * d)) / std::sqrt(kPi);
}

std::uint64_t rising_factorial(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < b; ++i) {
    if (__builtin_mul_overflow(out, a + i, &out)) {
      throw OverflowError("rising factorial (" + std::to_string(a) + ", " +
                          std::to_string(b) + ") exceeds 64 bits");
    }
  }
  return out;
}

double log_rising_factorial(double a, double b) {
  if (!(a > 0)) throw PreconditionError("log_rising_factorial requires a > 0");
  return std::lgamma(a + b) - std::lgamma(a);
}

double beta_moment(int a, int b) {
  if (a < 0 || b < 0) throw PreconditionError("beta_moment requires a, b >= 0");
  // a! b! / (a+b+1)! = prod_{i=1}^{lo} i / (hi + i) / (a + b + 1); every
  // factor is at most 1, so nothing overflows.
  const int lo = std::min(a, b);
  const int hi = std::max(a, b);
  double out = 1.0 / (a + b + 1.0);
  for (int i = 1; i <= lo; ++i) out *= static_cast<double>(i) / (hi + i);
  return out;
}

double log_binomial(int n, int k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double qk_exact(int n, int k, int d, double tol) {
  if (n < 0 || k < 0 || k > n) throw PreconditionError("qk_exact requires 0 <= k <= n");
  if (d < 1) throw PreconditionError("qk_exact requires d >= 1");
  const double log_scale = std::log(rho(d)) + log_binomial(n, k);
  auto integrand = [=](double phi) {
    const double t = phi / kPi;
    const double s = std::sin(phi);
    if (d > 1 && s <= 0.0) return 0.0;
    double log_v = log_scale;
    if (d > 1) log_v += (d - 1) * std::log(s);
    if (k > 0) {
      if (t <= 0.0) return 0.0;
      log_v += k * std::log(t);
    }
    if (n - k > 0) {
      if (t >= 1.0) return 0.0;
      log_v += (n - k) * std::log1p(-t);
    }
    return std::exp(log_v);
  };
  QuadratureOptions opts;
  opts.tol = tol;
  opts.initial_panels = std::max(64, 4 * n);
  const double q = adaptive_simpson(integrand, 0.0, kPi, opts).value;
  return std::clamp(q, 0.0, 1.0);
}

QkBounds qk_bounds(int n, int k, int d) {
  if (k < 0 || 2 * k > n) {
    throw RangeError("q_k bounds hold for 0 <= k <= n/2 (n=" + std::to_string(n) +
                     ", k=" + std::to_string(k) + ")");
  }
  if (d < 1) throw PreconditionError("qk_bounds requires d >= 1");
  const double log_rho_pi = std::log(rho(d)) + std::log(kPi);
  const double lower = std::exp((d - 1) * std::log(2.0) + log_rho_pi +
                                log_rising_factorial(k + 1.0, d - 1.0) +
                                log_rising_factorial(n - k + 1.0, d - 1.0) -
                                log_rising_factorial(n + 1.0, 2.0 * d - 1.0));
  const double upper_flat = std::exp(log_rho_pi - std::log(n + 1.0));
  const double upper_sin = std::exp(std::log(rho(d)) + d * std::log(kPi) +
                                    log_rising_factorial(k + 1.0, d - 1.0) -
                                    log_rising_factorial(n + 1.0, d));
  return {lower, std::min(upper_flat, upper_sin)};
}

double McQk::q_hat(int k) const {
  return static_cast<double>(counts.at(k)) / static_cast<double>(samples);
}

double McQk::stderr_of(int k) const {
  const double q = q_hat(k);
  return std::sqrt(q * (1.0 - q) / static_cast<double>(samples));
}

McQk mc_qk(int n, int d, const McOptions& options) {
  if (options.samples < 1) throw PreconditionError("samples must be >= 1");
  if (options.chunks < 1) throw PreconditionError("chunks must be >= 1");
  if (n < 0 || d < 1) throw PreconditionError("mc_qk requires n >= 0, d >= 1");
  McQk out{n, d, options.samples, {}};
  out.counts = options.parallel
                   ? kernels::omp::mc_qk_histogram(n, d, options.samples, options.seed,
                                                   options.chunks)
                   : kernels::serial::mc_qk_histogram(n, d, options.samples, options.seed,
                                                      options.chunks);
  return out;
}

QkTable qk_table(int n, int d, int kmax, double tol, const McQk* mc) {
  if (kmax < 0) throw PreconditionError("kmax must be >= 0");
  QkTable table{d, n, {}};
  for (int k = 0; k <= std::min(kmax, n); ++k) {
    QkRow row;
    row.k = k;
    row.q_exact = qk_exact(n, k, d, tol);
    if (2 * k <= n) {
      const QkBounds b = qk_bounds(n, k, d);
      row.q_lower = b.lower;
      row.q_upper = b.upper;
    }
    if (mc != nullptr) {
      row.q_mc = mc->q_hat(k);
      row.stderr_mc = mc->stderr_of(k);
    }
    table.rows.push_back(row);
  }
  return table;
}

double LevelEstimate::ratio() const { return mc_mean / std::pow(k + 1.0, d - 1.0); }

double analytic_level(int m, int d, int k, double tol) {
  if (k < 0 || k > m - d) return 0.0;
  return 2.0 * std::exp(log_binomial(m, d)) * qk_exact(m - d, k, d, tol);
}

QkBounds level_ratio_envelope(int m, int d, int k) {
  const QkBounds b = qk_bounds(m - d, k, d);
  const double scale = 2.0 * std::exp(log_binomial(m, d)) / std::pow(k + 1.0, d - 1.0);
  return {b.lower * scale, b.upper * scale};
}

LevelEstimates mc_level(int m, int d, const McLevelOptions& options) {
  if (d < 2) throw PreconditionError("mc_level requires d >= 2");
  if (m <= d) throw PreconditionError("mc_level requires m > d");
  if (options.samples < 1) throw PreconditionError("samples must be >= 1");
  if (options.chunks < 1) throw PreconditionError("chunks must be >= 1");
  const double work = std::exp(log_binomial(m, d)) * m * static_cast<double>(options.samples);
  if (work > options.budget) {
    throw BudgetError("C(m,d)*m*samples = " + std::to_string(work) +
                      " exceeds the operation budget");
  }
  const int top = m - d;
  const int default_kmax = std::min(top, 2 * ((top + 1) / 2));
  const int kmax = std::max(options.kmax.value_or(default_kmax), 0);

  const kernels::LevelMoments mom =
      options.parallel
          ? kernels::omp::mc_level_moments(m, d, options.samples, options.seed, options.chunks)
          : kernels::serial::mc_level_moments(m, d, options.samples, options.seed,
                                              options.chunks);
  const double count = static_cast<double>(mom.samples);

  auto estimate = [&](int k, double sum, double sum_sq, double analytic) {
    LevelEstimate e{d, m, k, sum / count, 0.0, analytic};
    if (mom.samples > 1) {
      const double var = std::max(0.0, (sum_sq - sum * sum / count) / (count - 1.0));
      e.mc_stderr = std::sqrt(var / count);
    }
    return e;
  };

  LevelEstimates out{d, m, kmax, mom.samples, {}, std::nullopt};
  for (int k = 0; k <= kmax; ++k) {
    // Levels past m - d are empty.
    if (k > top) {
      out.rows.push_back(LevelEstimate{d, m, k, 0.0, 0.0, 0.0});
      continue;
    }
    out.rows.push_back(
        estimate(k, mom.sum[k], mom.sum_sq[k], analytic_level(m, d, k, options.tol)));
  }
  if (kmax < top) {
    // Per-sample overflow totals are not kept; the sum of per-bin standard
    // errors bounds the standard error of the pooled bin.
    double sum = 0.0, err = 0.0, analytic = 0.0;
    for (int k = kmax + 1; k <= top; ++k) {
      const LevelEstimate e =
          estimate(k, mom.sum[k], mom.sum_sq[k], analytic_level(m, d, k, options.tol));
      sum += mom.sum[k];
      err += e.mc_stderr;
      analytic += e.analytic;
    }
    LevelEstimate e{d, m, kmax + 1, sum / count, err, analytic};
    out.overflow = e;
  }
  return out;
}

}  // namespace spherelevels

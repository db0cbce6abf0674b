#include "spherelevels/quadrature.hpp"

#include <cmath>
#include <vector>

#include "spherelevels/errors.hpp"

namespace spherelevels {

namespace {

struct Panel {
  double a, b, fa, fm, fb, whole, tol;
  int depth;
};

constexpr int kMaxDepth = 60;

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a,
                                  double b, const QuadratureOptions& options) {
  if (!(options.tol > 0)) throw PreconditionError("quadrature tolerance must be > 0");
  const int panels = options.initial_panels > 0 ? options.initial_panels : 1;
  const double width = (b - a) / panels;

  QuadratureResult result;
  std::vector<Panel> stack;
  for (int p = panels - 1; p >= 0; --p) {
    const double lo = a + p * width;
    const double hi = p + 1 == panels ? b : lo + width;
    const double mid = 0.5 * (lo + hi);
    const double flo = f(lo), fmid = f(mid), fhi = f(hi);
    const double whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi);
    stack.push_back({lo, hi, flo, fmid, fhi, whole, options.tol / panels, 0});
  }
  result.intervals = panels;

  // Depth-first; the stack order makes the summation order deterministic.
  while (!stack.empty()) {
    const Panel s = stack.back();
    stack.pop_back();
    const double m = 0.5 * (s.a + s.b);
    const double lm = 0.5 * (s.a + m);
    const double rm = 0.5 * (m + s.b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - s.a) / 6.0 * (s.fa + 4.0 * flm + s.fm);
    const double right = (s.b - m) / 6.0 * (s.fm + 4.0 * frm + s.fb);
    const double diff = left + right - s.whole;
    if (std::abs(diff) <= 15.0 * s.tol) {
      result.value += left + right + diff / 15.0;
      result.error_estimate += std::abs(diff) / 15.0;
      continue;
    }
    if (s.depth >= kMaxDepth || ++result.intervals > options.max_intervals) {
      throw ConvergenceError("adaptive quadrature exceeded its subdivision budget");
    }
    stack.push_back({m, s.b, s.fm, frm, s.fb, right, 0.5 * s.tol, s.depth + 1});
    stack.push_back({s.a, m, s.fa, flm, s.fm, left, 0.5 * s.tol, s.depth + 1});
  }
  return result;
}

}  // namespace spherelevels

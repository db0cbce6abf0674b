#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "spherelevels/arrangement.hpp"

namespace spherelevels {

enum class HalfIntervalKind { Left, Right };

/// Left = (-inf, endpoint], Right = [endpoint, +inf).
struct HalfInterval {
  HalfIntervalKind kind = HalfIntervalKind::Left;
  double endpoint = 0.0;

  bool contains(double p) const {
    return kind == HalfIntervalKind::Left ? p <= endpoint : p >= endpoint;
  }
};

/// Closed arc of length pi centred at `center_angle` in [0, 2pi).
struct HalfCircle {
  double center_angle = 0.0;

  static HalfCircle centered_at(double angle);
  bool contains(double angle) const;
};

// Closed-arc membership slack for probes computed at arc endpoints.
inline constexpr double kArcClosureSlack = 1e-12;

/// Standard probes: endpoints, midpoints of consecutive endpoints, and
/// outer sentinels (line) or the wrap-around midpoint (circle). Refined
/// probes add quarter points between consecutive endpoints.
enum class ProbeDensity { Standard, Refined };

std::vector<double> line_probe_points(std::span<const HalfInterval> family,
                                      ProbeDensity density = ProbeDensity::Standard);
std::vector<double> circle_probe_points(std::span<const HalfCircle> family,
                                        ProbeDensity density = ProbeDensity::Standard);

/// Number of distinct k-cliques for every k in [0, n]. A k-clique is a
/// k-subset that is exactly the containment set of some probe point.
std::vector<std::int64_t> clique_counts_line(std::span<const HalfInterval> family,
                                             ProbeDensity density = ProbeDensity::Standard);
std::vector<std::int64_t> clique_counts_circle(std::span<const HalfCircle> family,
                                               ProbeDensity density = ProbeDensity::Standard);

std::int64_t count_k_cliques_line(std::span<const HalfInterval> family, int k);
std::int64_t count_k_cliques_circle(std::span<const HalfCircle> family, int k);

/// (left count, right count) containing p.
std::pair<int, int> line_signature(std::span<const HalfInterval> family, double p);

/// Distinct containment sets realised on the line, as sorted index lists.
std::vector<std::vector<int>> realized_cliques_line(std::span<const HalfInterval> family);

/// Minimum number of half-circles covering a point of the circle.
int min_coverage_depth(std::span<const HalfCircle> family);

/// For every circle D other than C and not through v, the half-circle of C
/// separated from v by D, in C's angular frame. Throws PreconditionError when
/// v lies on C.
std::vector<HalfCircle> half_circles_of_vertex(const ArrangementGraph& graph, int vertex,
                                               int circle);

}  // namespace spherelevels

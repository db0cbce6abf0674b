#include "spherelevels/cliques.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

#include "spherelevels/errors.hpp"

namespace spherelevels {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0) t += kTwoPi;
  if (t >= kTwoPi) t -= kTwoPi;
  return t;
}

using Bitset = std::vector<std::uint64_t>;

template <typename Family, typename Contains>
std::vector<std::int64_t> count_by_size(const Family& family,
                                        const std::vector<double>& probes,
                                        Contains&& contains) {
  const std::size_t n = family.size();
  std::set<Bitset> seen;
  std::vector<std::int64_t> counts(n + 1, 0);
  Bitset bits((n + 63) / 64);
  for (double p : probes) {
    std::fill(bits.begin(), bits.end(), 0);
    std::size_t size = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (contains(family[i], p)) {
        bits[i / 64] |= std::uint64_t{1} << (i % 64);
        ++size;
      }
    }
    if (seen.insert(bits).second) ++counts[size];
  }
  return counts;
}

std::vector<double> circle_endpoints(std::span<const HalfCircle> family) {
  std::vector<double> ends;
  ends.reserve(2 * family.size());
  for (const auto& h : family) {
    ends.push_back(wrap(h.center_angle - kPi / 2));
    ends.push_back(wrap(h.center_angle + kPi / 2));
  }
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  return ends;
}

}  // namespace

HalfCircle HalfCircle::centered_at(double angle) { return HalfCircle{wrap(angle)}; }

bool HalfCircle::contains(double angle) const {
  double d = std::abs(wrap(angle) - center_angle);
  d = std::min(d, kTwoPi - d);
  return d <= kPi / 2 + kArcClosureSlack;
}

std::vector<double> line_probe_points(std::span<const HalfInterval> family,
                                      ProbeDensity density) {
  std::vector<double> ends;
  ends.reserve(family.size());
  for (const auto& h : family) ends.push_back(h.endpoint);
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  if (ends.empty()) return {0.0};

  std::vector<double> probes(ends);
  for (std::size_t i = 0; i + 1 < ends.size(); ++i) {
    const double gap = ends[i + 1] - ends[i];
    probes.push_back(ends[i] + 0.5 * gap);
    if (density == ProbeDensity::Refined) {
      probes.push_back(ends[i] + 0.25 * gap);
      probes.push_back(ends[i] + 0.75 * gap);
    }
  }
  probes.push_back(ends.front() - 1.0);
  probes.push_back(ends.back() + 1.0);
  if (density == ProbeDensity::Refined) {
    probes.push_back(ends.front() - 2.0);
    probes.push_back(ends.back() + 2.0);
  }
  return probes;
}

std::vector<double> circle_probe_points(std::span<const HalfCircle> family,
                                        ProbeDensity density) {
  const std::vector<double> ends = circle_endpoints(family);
  if (ends.empty()) return {0.0};
  std::vector<double> probes(ends);
  for (std::size_t i = 0; i < ends.size(); ++i) {
    const double from = ends[i];
    double to = i + 1 < ends.size() ? ends[i + 1] : ends.front() + kTwoPi;
    const double gap = to - from;
    probes.push_back(wrap(from + 0.5 * gap));
    if (density == ProbeDensity::Refined) {
      probes.push_back(wrap(from + 0.25 * gap));
      probes.push_back(wrap(from + 0.75 * gap));
    }
  }
  return probes;
}

std::vector<std::int64_t> clique_counts_line(std::span<const HalfInterval> family,
                                             ProbeDensity density) {
  return count_by_size(family, line_probe_points(family, density),
                       [](const HalfInterval& h, double p) { return h.contains(p); });
}

std::vector<std::int64_t> clique_counts_circle(std::span<const HalfCircle> family,
                                               ProbeDensity density) {
  return count_by_size(family, circle_probe_points(family, density),
                       [](const HalfCircle& h, double p) { return h.contains(p); });
}

std::int64_t count_k_cliques_line(std::span<const HalfInterval> family, int k) {
  if (k < 0) throw PreconditionError("k must be >= 0");
  if (static_cast<std::size_t>(k) > family.size()) return 0;
  return clique_counts_line(family)[k];
}

std::int64_t count_k_cliques_circle(std::span<const HalfCircle> family, int k) {
  if (k < 0) throw PreconditionError("k must be >= 0");
  if (static_cast<std::size_t>(k) > family.size()) return 0;
  return clique_counts_circle(family)[k];
}

std::pair<int, int> line_signature(std::span<const HalfInterval> family, double p) {
  int l = 0;
  int r = 0;
  for (const auto& h : family) {
    if (!h.contains(p)) continue;
    (h.kind == HalfIntervalKind::Left ? l : r)++;
  }
  return {l, r};
}

std::vector<std::vector<int>> realized_cliques_line(std::span<const HalfInterval> family) {
  std::set<std::vector<int>> sets;
  for (double p : line_probe_points(family)) {
    std::vector<int> members;
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (family[i].contains(p)) members.push_back(static_cast<int>(i));
    }
    sets.insert(std::move(members));
  }
  return {sets.begin(), sets.end()};
}

int min_coverage_depth(std::span<const HalfCircle> family) {
  int best = std::numeric_limits<int>::max();
  for (double p : circle_probe_points(family)) {
    int depth = 0;
    for (const auto& h : family) depth += h.contains(p) ? 1 : 0;
    best = std::min(best, depth);
  }
  return best;
}

std::vector<HalfCircle> half_circles_of_vertex(const ArrangementGraph& graph, int vertex,
                                               int circle) {
  if (vertex < 0 || vertex >= static_cast<int>(graph.vertices().size()) || circle < 0 ||
      circle >= graph.circle_count()) {
    throw PreconditionError("vertex or circle out of range");
  }
  const Vertex& v = graph.vertices()[vertex];
  if (v.on_circle(circle)) {
    throw PreconditionError("vertex lies on the circle");
  }
  const CircleFrame& frame = graph.frame(circle);
  std::vector<HalfCircle> out;
  for (int dc = 0; dc < graph.circle_count(); ++dc) {
    if (dc == circle || v.on_circle(dc)) continue;
    const auto& nd = graph.arrangement().normals[dc];
    const double a = nd[0] * frame.u[0] + nd[1] * frame.u[1] + nd[2] * frame.u[2];
    const double b = nd[0] * frame.w[0] + nd[1] * frame.w[1] + nd[2] * frame.w[2];
    // Points of C on the positive side of D are centred at atan2(b, a).
    const double positive_center = std::atan2(b, a);
    const bool v_positive = graph.vertex_sign(vertex, dc) > 0;
    out.push_back(HalfCircle::centered_at(v_positive ? positive_center + kPi : positive_center));
  }
  return out;
}

}  // namespace spherelevels

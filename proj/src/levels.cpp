#include "spherelevels/levels.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numbers>
#include <string>

#include "spherelevels/errors.hpp"
#include "spherelevels/kernels.hpp"

namespace spherelevels {

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max();

void check_vertex(const ArrangementGraph& g, int v) {
  if (v < 0 || v >= static_cast<int>(g.vertices().size())) {
    throw PreconditionError("vertex id " + std::to_string(v) + " out of range");
  }
}
void check_cell(const ArrangementGraph& g, int f) {
  if (f < 0 || f >= static_cast<int>(g.cells().size())) {
    throw PreconditionError("cell id " + std::to_string(f) + " out of range");
  }
}
void check_circle(const ArrangementGraph& g, int c) {
  if (c < 0 || c >= g.circle_count()) {
    throw PreconditionError("circle index " + std::to_string(c) + " out of range");
  }
}
void check_strict(Sign s) {
  if (s == Sign::Zero) throw PreconditionError("side must be + or -");
}

std::vector<int> multi_source_bfs(const ArrangementGraph& g, const std::vector<int>& sources) {
  std::vector<int> dist(g.cells().size(), kUnreached);
  std::deque<int> queue;
  for (int s : sources) {
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    for (int nb : g.adjacent_cells(f)) {
      if (dist[nb] == kUnreached) {
        dist[nb] = dist[f] + 1;
        queue.push_back(nb);
      }
    }
  }
  return dist;
}

// v lies in the closed s-hemisphere of C.
bool in_closed_side(const ArrangementGraph& g, int v, int circle, Sign s) {
  const std::int8_t vs = g.vertex_sign(v, circle);
  return vs == 0 || vs == static_cast<std::int8_t>(to_int(s));
}

}  // namespace

int vertex_cell_distance(const ArrangementGraph& graph, int vertex, int cell) {
  check_vertex(graph, vertex);
  check_cell(graph, cell);
  const Vertex& v = graph.vertices()[vertex];
  const int exclude[2] = {v.circles[0], v.circles[1]};
  return separation_count(v.position, graph.cells()[cell].representative,
                          graph.arrangement(), exclude);
}

std::vector<int> bfs_distances_from_vertex(const ArrangementGraph& graph, int vertex) {
  check_vertex(graph, vertex);
  const auto& around = graph.incident_cells(vertex);
  return multi_source_bfs(graph, std::vector<int>(around.begin(), around.end()));
}

int bfs_distance_oracle(const ArrangementGraph& graph, int vertex, int cell) {
  check_cell(graph, cell);
  return bfs_distances_from_vertex(graph, vertex)[cell];
}

LevelProfile level_profile(const ArrangementGraph& graph, int cell) {
  check_cell(graph, cell);
  LevelProfile p{cell, std::vector<std::int64_t>(graph.circle_count(), 0)};
  for (const Vertex& v : graph.vertices()) {
    ++p.counts[vertex_cell_distance(graph, v.id, cell)];
  }
  return p;
}

std::vector<ExpectedLevel> expected_level(const std::vector<LevelProfile>& profiles,
                                          int cell_count) {
  std::size_t levels = 0;
  for (const auto& p : profiles) levels = std::max(levels, p.counts.size());
  std::vector<ExpectedLevel> out(levels);
  for (std::size_t k = 0; k < levels; ++k) {
    out[k].k = static_cast<int>(k);
    out[k].denominator = cell_count;
  }
  // Ascending cell order.
  for (const auto& p : profiles) {
    for (std::size_t k = 0; k < p.counts.size(); ++k) out[k].numerator += p.counts[k];
  }
  return out;
}

std::vector<ExpectedLevel> expected_level(const ArrangementGraph& graph) {
  return expected_level(kernels::omp::all_level_profiles(graph),
                        static_cast<int>(graph.cells().size()));
}

double expected_level_bound(int k) {
  const double kk = k + 2.0;
  return 4.0 * std::numbers::e * kk * kk;
}

std::int64_t pairs_count(const ArrangementGraph& graph, const DistanceTable& table,
                         int circle, Sign s, int k) {
  check_circle(graph, circle);
  check_strict(s);
  if (k < 0) throw PreconditionError("k must be >= 0");
  const auto& cells = graph.cells_touching_side(circle, negate(s));
  std::int64_t count = 0;
  for (const Vertex& v : graph.vertices()) {
    if (!in_closed_side(graph, v.id, circle, s)) continue;
    for (int f : cells) {
      if (table.at(v.id, f) == k) ++count;
    }
  }
  return count;
}

std::int64_t pairs_count(const ArrangementGraph& graph, int circle, Sign s, int k) {
  check_circle(graph, circle);
  check_strict(s);
  if (k < 0) throw PreconditionError("k must be >= 0");
  const auto& cells = graph.cells_touching_side(circle, negate(s));
  std::int64_t count = 0;
  for (const Vertex& v : graph.vertices()) {
    if (!in_closed_side(graph, v.id, circle, s)) continue;
    for (int f : cells) {
      if (vertex_cell_distance(graph, v.id, f) == k) ++count;
    }
  }
  return count;
}

namespace {

template <typename Distance>
int b_set_size_impl(const ArrangementGraph& graph, int vertex, int circle, Sign s, int k,
                    Distance&& dist) {
  check_vertex(graph, vertex);
  check_circle(graph, circle);
  check_strict(s);
  if (k < 1) throw PreconditionError("b_set_size requires k >= 1");
  if (!in_closed_side(graph, vertex, circle, s)) {
    throw PreconditionError("vertex " + std::to_string(vertex) +
                            " is on the wrong side of circle " + std::to_string(circle));
  }
  int count = 0;
  for (int f : graph.cells_touching_side(circle, negate(s))) {
    if (dist(vertex, f) == k) ++count;
  }
  return count;
}

}  // namespace

int b_set_size(const ArrangementGraph& graph, int vertex, int circle, Sign s, int k) {
  return b_set_size_impl(graph, vertex, circle, s, k, [&](int v, int f) {
    return vertex_cell_distance(graph, v, f);
  });
}

int b_set_size(const ArrangementGraph& graph, const DistanceTable& table, int vertex,
               int circle, Sign s, int k) {
  return b_set_size_impl(graph, vertex, circle, s, k,
                         [&](int v, int f) { return table.at(v, f); });
}

std::vector<int> zone_distances(const ArrangementGraph& graph, int circle) {
  check_circle(graph, circle);
  std::vector<int> sources = graph.cells_touching_side(circle, Sign::Positive);
  const auto& neg = graph.cells_touching_side(circle, Sign::Negative);
  sources.insert(sources.end(), neg.begin(), neg.end());
  const std::vector<int> cell_dist = multi_source_bfs(graph, sources);

  std::vector<int> out(graph.vertices().size());
  for (const Vertex& v : graph.vertices()) {
    if (v.on_circle(circle)) {
      out[v.id] = 0;
      continue;
    }
    int best = kUnreached;
    for (int f : graph.incident_cells(v.id)) best = std::min(best, cell_dist[f]);
    out[v.id] = best;
  }
  return out;
}

int zone_distance(const ArrangementGraph& graph, int vertex, int circle) {
  check_vertex(graph, vertex);
  return zone_distances(graph, circle)[vertex];
}

ZoneProfile zone_profile(const ArrangementGraph& graph, int circle, int jmax) {
  if (jmax < 0) throw PreconditionError("jmax must be >= 0");
  const std::vector<int> dist = zone_distances(graph, circle);
  const auto len = static_cast<std::size_t>(jmax) + 1;
  ZoneProfile z{circle, std::vector<std::int64_t>(len, 0),
                std::vector<std::int64_t>(len, 0), std::vector<std::int64_t>(len, 0)};
  for (const Vertex& v : graph.vertices()) {
    if (dist[v.id] > jmax) continue;
    const std::int8_t vs = graph.vertex_sign(v.id, circle);
    for (std::size_t j = static_cast<std::size_t>(dist[v.id]); j < len; ++j) {
      ++z.both[j];
      if (vs > 0) ++z.strict_plus[j];
      if (vs < 0) ++z.strict_minus[j];
    }
  }
  return z;
}

std::int64_t zone_count(const ArrangementGraph& graph, int circle, int j, ZoneSide side) {
  if (j < 0) throw PreconditionError("j must be >= 0");
  const ZoneProfile z = zone_profile(graph, circle, j);
  switch (side) {
    case ZoneSide::Both: return z.both[j];
    case ZoneSide::StrictPlus: return z.strict_plus[j];
    case ZoneSide::StrictMinus: return z.strict_minus[j];
  }
  return 0;
}

double strict_zone_bound(int j, int n) { return 2.0 * std::numbers::e * (j + 2.0) * n; }
double sphere_zone_bound(int j, int n) { return 4.0 * std::numbers::e * (j + 2.0) * n; }

}  // namespace spherelevels

#pragma once

#include <cstdint>
#include <vector>

#include "spherelevels/arrangement.hpp"

namespace spherelevels {

/// f_k(F) for every k in [0, n): number of vertices at distance k from F.
struct LevelProfile {
  int cell = 0;
  std::vector<std::int64_t> counts;
};

/// Average k-level size over a uniformly random cell, kept as an exact ratio.
struct ExpectedLevel {
  int k = 0;
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;

  double value() const {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
  /// numerator / denominator <= bound, decided without dividing.
  bool at_most(double bound) const {
    return static_cast<double>(numerator) <= bound * static_cast<double>(denominator);
  }
};

enum class ZoneSide { Both, StrictPlus, StrictMinus };

/// Cumulative (<= j)-zone vertex counts of one circle for j = 0..jmax.
struct ZoneProfile {
  int circle = 0;
  std::vector<std::int64_t> both;
  std::vector<std::int64_t> strict_plus;
  std::vector<std::int64_t> strict_minus;
};

/// Dense vertex x cell distance matrix.
class DistanceTable {
 public:
  DistanceTable() = default;
  DistanceTable(int vertices, int cells)
      : vertices_(vertices), cells_(cells),
        data_(static_cast<std::size_t>(vertices) * cells, 0) {}

  int vertices() const { return vertices_; }
  int cells() const { return cells_; }
  int at(int vertex, int cell) const {
    return data_[static_cast<std::size_t>(vertex) * cells_ + cell];
  }
  void set(int vertex, int cell, int value) {
    data_[static_cast<std::size_t>(vertex) * cells_ + cell] =
        static_cast<std::int16_t>(value);
  }
  bool operator==(const DistanceTable&) const = default;

 private:
  int vertices_ = 0;
  int cells_ = 0;
  std::vector<std::int16_t> data_;
};

/// Fewest circles crossed by a curve from vertex v into cell F. Circles
/// through v never count, so this is the separation count between v and the
/// cell's representative with v's two circles excluded.
int vertex_cell_distance(const ArrangementGraph& graph, int vertex, int cell);

/// Same quantity by breadth-first search over the cell adjacency graph,
/// starting from the four cells around v.
int bfs_distance_oracle(const ArrangementGraph& graph, int vertex, int cell);

/// BFS distances from the cells around v to every cell.
std::vector<int> bfs_distances_from_vertex(const ArrangementGraph& graph, int vertex);

LevelProfile level_profile(const ArrangementGraph& graph, int cell);

/// E_k for k = 0..n-1 over a uniformly random south-pole cell.
std::vector<ExpectedLevel> expected_level(const ArrangementGraph& graph);
std::vector<ExpectedLevel> expected_level(const std::vector<LevelProfile>& profiles,
                                          int cell_count);

/// 4e (k+2)^2.
double expected_level_bound(int k);

/// |F_k(C^s)|: pairs (F, v) with F a cell on side -s touching C, v a vertex
/// in the closed s-hemisphere of C, and dist(F, v) = k.
std::int64_t pairs_count(const ArrangementGraph& graph, int circle, Sign s, int k);
std::int64_t pairs_count(const ArrangementGraph& graph, const DistanceTable& table,
                         int circle, Sign s, int k);

/// |B_{C^s}(v)|: cells on side -s touching C at distance k from v.
/// Requires k >= 1 and v in the closed s-hemisphere of C.
int b_set_size(const ArrangementGraph& graph, int vertex, int circle, Sign s, int k);
int b_set_size(const ArrangementGraph& graph, const DistanceTable& table, int vertex,
               int circle, Sign s, int k);

/// Distance from vertex v to circle C (0 when v lies on C).
int zone_distance(const ArrangementGraph& graph, int vertex, int circle);

/// zone_distance for every vertex, one BFS.
std::vector<int> zone_distances(const ArrangementGraph& graph, int circle);

std::int64_t zone_count(const ArrangementGraph& graph, int circle, int j, ZoneSide side);

ZoneProfile zone_profile(const ArrangementGraph& graph, int circle, int jmax);

/// 2e (j+2) n and 4e (j+2) n.
double strict_zone_bound(int j, int n);
double sphere_zone_bound(int j, int n);

}  // namespace spherelevels

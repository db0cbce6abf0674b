#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "spherelevels/sphere_core.hpp"

namespace spherelevels {

inline constexpr double kAngularTolerance = 1e-9;
inline constexpr double kRepresentativeNudge = 1e-6;

struct Vertex {
  int id = 0;
  std::array<int, 2> circles{};  // ascending
  UnitVector position;

  bool on_circle(int c) const { return circles[0] == c || circles[1] == c; }
};

/// Arc of `circle` from endpoints[0] to endpoints[1], counterclockwise about
/// the circle's normal. The left face lies on the positive side.
struct Arc {
  int id = 0;
  int circle = 0;
  std::array<int, 2> endpoints{};
  std::array<int, 2> side_faces{};  // {left (+), right (-)}
  double start_angle = 0.0;         // in the circle's frame
  double length = 0.0;              // angular length, in (0, 2pi)
};

/// A directed arc: 2 * arc + 0 runs along the arc, 2 * arc + 1 against it.
using HalfEdge = int;

inline int arc_of(HalfEdge h) { return h >> 1; }
inline bool is_forward(HalfEdge h) { return (h & 1) == 0; }
inline HalfEdge twin(HalfEdge h) { return h ^ 1; }

struct Cell {
  int id = 0;
  std::vector<HalfEdge> boundary;  // cyclic, cell on the left
  std::vector<std::int8_t> sign_vector;
  UnitVector representative;
};

/// Orthonormal frame (u, w) of a great circle with w = normal x u; angle t
/// maps to cos(t) u + sin(t) w.
struct CircleFrame {
  std::array<double, 3> u{};
  std::array<double, 3> w{};

  double angle_of(const UnitVector& p) const;
  UnitVector point_at(double angle) const;
};

/// Vertices, arcs and cells of a simple arrangement of great circles on S^2,
/// with incidences. Immutable once built.
///
/// Numbering: the vertex pair of circles i < j gets ids 2p and 2p+1 where p is
/// the lexicographic index of (i, j); vertex 2p+1 is the antipode of 2p. Arcs
/// of circle i occupy ids [2(n-1) i, 2(n-1)(i+1)) in angular order. Cells are
/// numbered in discovery order of the half-edge traversal.
class ArrangementGraph {
 public:
  const GreatSphereArrangement& arrangement() const { return arr_; }
  int circle_count() const { return static_cast<int>(arr_.size()); }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<Cell>& cells() const { return cells_; }
  const CircleFrame& frame(int circle) const { return frames_[circle]; }

  /// Outgoing half-edges of a vertex in counterclockwise order seen from
  /// outside the sphere.
  const std::array<HalfEdge, 4>& outgoing(int vertex) const { return outgoing_[vertex]; }
  const std::array<int, 4>& incident_arcs(int vertex) const { return incident_arcs_[vertex]; }
  const std::array<int, 4>& incident_cells(int vertex) const { return incident_cells_[vertex]; }
  int face_of(HalfEdge h) const { return face_of_half_edge_[h]; }
  HalfEdge next(HalfEdge h) const { return next_[h]; }

  int origin(HalfEdge h) const;
  int destination(HalfEdge h) const { return origin(twin(h)); }

  /// Arc ids of one circle, in angular order.
  std::vector<int> arcs_on_circle(int circle) const;

  /// Cells sharing an arc with the given cell, one entry per shared arc.
  const std::vector<int>& adjacent_cells(int cell) const { return adjacency_[cell]; }

  /// Sign of `circle` at a vertex: 0 when the vertex lies on it.
  std::int8_t vertex_sign(int vertex, int circle) const {
    return vertex_signs_[static_cast<std::size_t>(vertex) * arr_.size() + circle];
  }
  std::int8_t cell_sign(int cell, int circle) const {
    return cells_[cell].sign_vector[circle];
  }

  int antipodal_vertex(int vertex) const { return vertex ^ 1; }
  int antipodal_arc(int arc) const { return antipodal_arc_[arc]; }
  int antipodal_cell(int cell) const { return antipodal_cell_[cell]; }

  /// Cell whose sign vector equals `signs`, or -1.
  int find_cell(const std::vector<std::int8_t>& signs) const;

  const std::vector<int>& cells_touching_side(int circle, Sign s) const {
    return s == Sign::Positive ? touching_pos_[circle] : touching_neg_[circle];
  }

 private:
  friend ArrangementGraph build_graph(const GreatSphereArrangement& arr);

  GreatSphereArrangement arr_;
  std::vector<CircleFrame> frames_;
  std::vector<Vertex> vertices_;
  std::vector<Arc> arcs_;
  std::vector<Cell> cells_;
  std::vector<std::array<HalfEdge, 4>> outgoing_;
  std::vector<std::array<int, 4>> incident_arcs_;
  std::vector<std::array<int, 4>> incident_cells_;
  std::vector<int> face_of_half_edge_;
  std::vector<HalfEdge> next_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::int8_t> vertex_signs_;
  std::vector<int> antipodal_arc_;
  std::vector<int> antipodal_cell_;
  std::vector<std::vector<int>> touching_pos_;
  std::vector<std::vector<int>> touching_neg_;
};

/// Builds the arrangement graph. Throws BuildError for n < 2 or d != 2 and
/// DegeneracyError for non-simple input.
ArrangementGraph build_graph(const GreatSphereArrangement& arr);

/// Interior point of the face to the left of `h`, nudged off the midpoint of
/// its arc and validated against every circle.
UnitVector representative_point(const ArrangementGraph& graph,
                                const std::vector<HalfEdge>& boundary);

/// Cells on the given side of circle i that share at least one arc with it.
std::vector<int> cells_touching(const ArrangementGraph& graph, int circle, Sign s);

}  // namespace spherelevels

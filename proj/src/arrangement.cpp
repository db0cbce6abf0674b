#include "spherelevels/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "spherelevels/errors.hpp"

namespace spherelevels {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

using Vec3 = std::array<double, 3>;

Vec3 to3(const UnitVector& v) { return {v[0], v[1], v[2]}; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

double dot3(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

double wrap_angle(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0) t += kTwoPi;
  return t;
}

CircleFrame make_frame(const UnitVector& normal) {
  const Vec3 nrm = to3(normal);
  // Seed with the axis least aligned with the normal.
  int axis = 0;
  for (int i = 1; i < 3; ++i) {
    if (std::abs(nrm[i]) < std::abs(nrm[axis])) axis = i;
  }
  Vec3 e{0, 0, 0};
  e[axis] = 1.0;
  const double c = dot3(e, nrm);
  Vec3 u{e[0] - c * nrm[0], e[1] - c * nrm[1], e[2] - c * nrm[2]};
  const double len = std::sqrt(dot3(u, u));
  for (double& x : u) x /= len;
  return CircleFrame{u, cross(nrm, u)};
}

}  // namespace

double CircleFrame::angle_of(const UnitVector& p) const {
  const Vec3 q = to3(p);
  return wrap_angle(std::atan2(dot3(q, w), dot3(q, u)));
}

UnitVector CircleFrame::point_at(double angle) const {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return UnitVector::normalized(
      {c * u[0] + s * w[0], c * u[1] + s * w[1], c * u[2] + s * w[2]});
}

int ArrangementGraph::origin(HalfEdge h) const {
  const Arc& a = arcs_[arc_of(h)];
  return is_forward(h) ? a.endpoints[0] : a.endpoints[1];
}

std::vector<int> ArrangementGraph::arcs_on_circle(int circle) const {
  const int per = 2 * (circle_count() - 1);
  std::vector<int> ids(static_cast<std::size_t>(per));
  for (int t = 0; t < per; ++t) ids[t] = circle * per + t;
  return ids;
}

int ArrangementGraph::find_cell(const std::vector<std::int8_t>& signs) const {
  // Linear scan; callers needing bulk lookups go through antipodal_cell().
  for (const Cell& c : cells_) {
    if (c.sign_vector == signs) return c.id;
  }
  return -1;
}

UnitVector representative_point(const ArrangementGraph& graph,
                                const std::vector<HalfEdge>& boundary) {
  if (boundary.size() < 2) {
    throw DegeneracyError("cell boundary has fewer than 2 arcs");
  }
  const auto& arr = graph.arrangement();
  const HalfEdge chosen = *std::max_element(
      boundary.begin(), boundary.end(), [&](HalfEdge a, HalfEdge b) {
        return graph.arcs()[arc_of(a)].length < graph.arcs()[arc_of(b)].length;
      });
  const Arc& arc = graph.arcs()[arc_of(chosen)];
  const UnitVector mid =
      graph.frame(arc.circle).point_at(arc.start_angle + 0.5 * arc.length);
  const double toward = is_forward(chosen) ? kRepresentativeNudge : -kRepresentativeNudge;
  const auto& nrm = arr.normals[arc.circle];
  UnitVector rep = UnitVector::normalized({mid[0] + toward * nrm[0],
                                           mid[1] + toward * nrm[1],
                                           mid[2] + toward * nrm[2]});

  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (side(arr.normals[i], rep) == Sign::Zero) {
      throw DegeneracyError("representative point lies on circle " +
                            std::to_string(i));
    }
  }
  for (HalfEdge h : boundary) {
    const int c = graph.arcs()[arc_of(h)].circle;
    const Sign expected = is_forward(h) ? Sign::Positive : Sign::Negative;
    if (side(arr.normals[c], rep) != expected) {
      throw DegeneracyError("representative nudge crossed circle " +
                            std::to_string(c));
    }
  }
  return rep;
}

ArrangementGraph build_graph(const GreatSphereArrangement& arr) {
  if (arr.dimension != 2) {
    throw BuildError("arrangement graphs are built for d = 2 only");
  }
  const int n = static_cast<int>(arr.size());
  if (n < 2) throw BuildError("need at least 2 circles, got " + std::to_string(n));
  validate_simple(arr);

  ArrangementGraph g;
  g.arr_ = arr;
  const int per_circle = 2 * (n - 1);
  const int vertex_count = n * (n - 1);
  const int arc_count = n * per_circle;

  g.frames_.reserve(n);
  for (const auto& nrm : arr.normals) g.frames_.push_back(make_frame(nrm));

  // Vertices, antipodal pairs at consecutive ids.
  g.vertices_.reserve(vertex_count);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const UnitVector pair_normals[2] = {arr.normals[i], arr.normals[j]};
      std::pair<UnitVector, UnitVector> vp;
      try {
        vp = vertex_pair(pair_normals);
      } catch (const DegenerateError& e) {
        throw DegeneracyError(e.what());
      }
      const int id = static_cast<int>(g.vertices_.size());
      g.vertices_.push_back(Vertex{id, {i, j}, std::move(vp.first)});
      g.vertices_.push_back(Vertex{id + 1, {i, j}, std::move(vp.second)});
    }
  }

  g.vertex_signs_.assign(static_cast<std::size_t>(vertex_count) * n, 0);
  for (const Vertex& v : g.vertices_) {
    for (int c = 0; c < n; ++c) {
      if (v.on_circle(c)) continue;
      const Sign s = side(arr.normals[c], v.position);
      if (s == Sign::Zero) {
        throw DegeneracyError("vertex " + std::to_string(v.id) + " lies on circle " +
                              std::to_string(c) + " (three concurrent circles)");
      }
      g.vertex_signs_[static_cast<std::size_t>(v.id) * n + c] =
          static_cast<std::int8_t>(to_int(s));
    }
  }

  // Arcs: sort the vertices of each circle by angle and link neighbours.
  g.arcs_.resize(arc_count);
  for (int c = 0; c < n; ++c) {
    std::vector<std::pair<double, int>> on;
    on.reserve(per_circle);
    for (const Vertex& v : g.vertices_) {
      if (v.on_circle(c)) on.emplace_back(g.frames_[c].angle_of(v.position), v.id);
    }
    std::sort(on.begin(), on.end());
    for (int t = 0; t < per_circle; ++t) {
      const auto& [a0, v0] = on[t];
      const auto& [a1, v1] = on[(t + 1) % per_circle];
      double len = a1 - a0;
      if (t + 1 == per_circle) len += kTwoPi;
      if (len <= kAngularTolerance) {
        throw DegeneracyError("vertices " + std::to_string(v0) + " and " +
                              std::to_string(v1) + " coincide on circle " +
                              std::to_string(c));
      }
      Arc& arc = g.arcs_[c * per_circle + t];
      arc.id = c * per_circle + t;
      arc.circle = c;
      arc.endpoints = {v0, v1};
      arc.start_angle = a0;
      arc.length = len;
    }
  }

  // Rotation system: outgoing half-edges sorted counterclockwise around the
  // outward normal at each vertex.
  std::vector<std::vector<std::pair<double, HalfEdge>>> around(vertex_count);
  for (const Arc& arc : g.arcs_) {
    around[arc.endpoints[0]].emplace_back(0.0, 2 * arc.id);
    around[arc.endpoints[1]].emplace_back(0.0, 2 * arc.id + 1);
  }
  g.outgoing_.resize(vertex_count);
  for (int v = 0; v < vertex_count; ++v) {
    auto& list = around[v];
    if (list.size() != 4) {
      throw DegeneracyError("vertex " + std::to_string(v) + " has degree " +
                            std::to_string(list.size()));
    }
    const Vec3 p = to3(g.vertices_[v].position);
    auto tangent = [&](HalfEdge h) {
      const Arc& arc = g.arcs_[arc_of(h)];
      Vec3 t = cross(to3(arr.normals[arc.circle]), p);
      if (!is_forward(h)) {
        for (double& x : t) x = -x;
      }
      return t;
    };
    const Vec3 e1 = tangent(list[0].second);
    const Vec3 e2 = cross(p, e1);
    for (auto& [angle, h] : list) {
      const Vec3 t = tangent(h);
      angle = wrap_angle(std::atan2(dot3(t, e2), dot3(t, e1)));
    }
    std::sort(list.begin(), list.end());
    for (int k = 0; k < 4; ++k) g.outgoing_[v][k] = list[k].second;
  }

  // next(h): at the head of h, the outgoing half-edge just clockwise of twin(h).
  const int half_edges = 2 * arc_count;
  g.next_.assign(half_edges, -1);
  for (HalfEdge h = 0; h < half_edges; ++h) {
    const int head = g.destination(h);
    const auto& out = g.outgoing_[head];
    const auto it = std::find(out.begin(), out.end(), twin(h));
    const int idx = static_cast<int>(it - out.begin());
    g.next_[h] = out[(idx + 3) % 4];
  }

  // Faces.
  g.face_of_half_edge_.assign(half_edges, -1);
  for (HalfEdge start = 0; start < half_edges; ++start) {
    if (g.face_of_half_edge_[start] != -1) continue;
    Cell cell;
    cell.id = static_cast<int>(g.cells_.size());
    HalfEdge h = start;
    do {
      if (g.face_of_half_edge_[h] != -1) {
        throw DegeneracyError("half-edge traversal revisited an edge");
      }
      g.face_of_half_edge_[h] = cell.id;
      cell.boundary.push_back(h);
      h = g.next_[h];
    } while (h != start);
    g.cells_.push_back(std::move(cell));
  }
  if (static_cast<int>(g.cells_.size()) != n * (n - 1) + 2) {
    throw DegeneracyError("face count " + std::to_string(g.cells_.size()) +
                          " differs from n(n-1)+2");
  }

  std::map<std::vector<std::int8_t>, int> by_signs;
  for (Cell& cell : g.cells_) {
    cell.representative = representative_point(g, cell.boundary);
    cell.sign_vector.resize(n);
    for (int c = 0; c < n; ++c) {
      cell.sign_vector[c] =
          static_cast<std::int8_t>(to_int(side(arr.normals[c], cell.representative)));
    }
    if (!by_signs.emplace(cell.sign_vector, cell.id).second) {
      throw DegeneracyError("two cells share a sign vector");
    }
  }

  for (Arc& arc : g.arcs_) {
    arc.side_faces = {g.face_of_half_edge_[2 * arc.id], g.face_of_half_edge_[2 * arc.id + 1]};
  }

  g.incident_arcs_.resize(vertex_count);
  g.incident_cells_.resize(vertex_count);
  for (int v = 0; v < vertex_count; ++v) {
    for (int k = 0; k < 4; ++k) {
      g.incident_arcs_[v][k] = arc_of(g.outgoing_[v][k]);
      g.incident_cells_[v][k] = g.face_of_half_edge_[g.outgoing_[v][k]];
    }
  }

  g.adjacency_.assign(g.cells_.size(), {});
  for (const Arc& arc : g.arcs_) {
    g.adjacency_[arc.side_faces[0]].push_back(arc.side_faces[1]);
    g.adjacency_[arc.side_faces[1]].push_back(arc.side_faces[0]);
  }

  g.touching_pos_.assign(n, {});
  g.touching_neg_.assign(n, {});
  for (int c = 0; c < n; ++c) {
    for (int a : g.arcs_on_circle(c)) {
      g.touching_pos_[c].push_back(g.arcs_[a].side_faces[0]);
      g.touching_neg_[c].push_back(g.arcs_[a].side_faces[1]);
    }
    for (auto* list : {&g.touching_pos_[c], &g.touching_neg_[c]}) {
      std::sort(list->begin(), list->end());
      list->erase(std::unique(list->begin(), list->end()), list->end());
    }
  }

  // Antipodes: arc (a -> b) on circle c maps to (a^1 -> b^1) on c.
  std::map<std::pair<int, int>, int> arc_by_start;
  for (const Arc& arc : g.arcs_) arc_by_start[{arc.circle, arc.endpoints[0]}] = arc.id;
  g.antipodal_arc_.resize(arc_count);
  for (const Arc& arc : g.arcs_) {
    g.antipodal_arc_[arc.id] = arc_by_start.at({arc.circle, arc.endpoints[0] ^ 1});
  }
  g.antipodal_cell_.resize(g.cells_.size());
  for (const Cell& cell : g.cells_) {
    std::vector<std::int8_t> neg(cell.sign_vector);
    for (auto& s : neg) s = static_cast<std::int8_t>(-s);
    const auto it = by_signs.find(neg);
    if (it == by_signs.end()) throw DegeneracyError("cell has no antipodal cell");
    g.antipodal_cell_[cell.id] = it->second;
  }

  return g;
}

std::vector<int> cells_touching(const ArrangementGraph& graph, int circle, Sign s) {
  if (circle < 0 || circle >= graph.circle_count()) {
    throw PreconditionError("circle index out of range");
  }
  if (s == Sign::Zero) throw PreconditionError("cells_touching needs a strict side");
  return graph.cells_touching_side(circle, s);
}

}  // namespace spherelevels

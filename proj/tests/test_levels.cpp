#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "spherelevels/cliques.hpp"
#include "spherelevels/errors.hpp"
#include "spherelevels/kernels.hpp"
#include "spherelevels/levels.hpp"
#include "test_util.hpp"

using namespace spherelevels;
using namespace spherelevels::testing;

namespace {

constexpr double kE = std::numbers::e;

ArrangementGraph two_circles() { return build_graph(make_arrangement({{1, 0, 0}, {0, 1, 0}})); }

}  // namespace

TEST(VertexCellDistance, IncidentCellsAreZero) {
  const auto g = random_graph(7, 1);
  for (const auto& v : g.vertices()) {
    for (int c : g.incident_cells(v.id)) EXPECT_EQ(vertex_cell_distance(g, v.id, c), 0);
  }
}

TEST(VertexCellDistance, CoordinateExample) {
  const auto g = build_graph(coordinate_arrangement());
  const int v = vertex_at(g, {0, 0, 1});
  const int f = cell_containing(g, {1, 1, -1});
  ASSERT_GE(v, 0);
  ASSERT_GE(f, 0);
  EXPECT_EQ(vertex_cell_distance(g, v, f), 1);
  EXPECT_EQ(bfs_distance_oracle(g, v, f), 1);
}

TEST(VertexCellDistance, AntipodeOfIncidentCell) {
  for (int n = 3; n <= 8; ++n) {
    const auto g = random_graph(n, 10 + n);
    for (const auto& v : g.vertices()) {
      for (int c : g.incident_cells(v.id)) {
        const int a = g.antipodal_cell(c);
        EXPECT_EQ(vertex_cell_distance(g, v.id, a), n - 2);
        EXPECT_EQ(bfs_distance_oracle(g, v.id, a), n - 2);
      }
    }
  }
}

TEST(BfsOracle, TwoCirclesAllZero) {
  const auto g = two_circles();
  for (const auto& v : g.vertices()) {
    for (const auto& c : g.cells()) EXPECT_EQ(bfs_distance_oracle(g, v.id, c.id), 0);
  }
}

TEST(BfsOracle, MatchesClosedFormExhaustively) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 3 + static_cast<int>(seed % 6);
    const auto g = random_graph(n, 500 + seed);
    for (const auto& v : g.vertices()) {
      const auto bfs = bfs_distances_from_vertex(g, v.id);
      for (const auto& c : g.cells()) {
        ASSERT_EQ(vertex_cell_distance(g, v.id, c.id), bfs[c.id])
            << "n=" << n << " v=" << v.id << " cell=" << c.id;
        ASSERT_EQ(bfs_distance_oracle(g, v.id, c.id), bfs[c.id]);
      }
    }
  }
}

TEST(LevelProfile, CoordinateIsThreeThree) {
  const auto g = build_graph(coordinate_arrangement());
  for (const auto& c : g.cells()) {
    const auto p = level_profile(g, c.id);
    EXPECT_EQ(p.counts, (std::vector<std::int64_t>{3, 3, 0}));
  }
}

TEST(LevelProfile, TwoCircleLunes) {
  const auto g = two_circles();
  for (const auto& c : g.cells()) {
    EXPECT_EQ(level_profile(g, c.id).counts, (std::vector<std::int64_t>{2, 0}));
  }
}

TEST(LevelProfile, SumsAndAntipodalSymmetry) {
  const auto g = random_graph(11, 2);
  const int n = g.circle_count();
  for (const auto& c : g.cells()) {
    const auto p = level_profile(g, c.id);
    ASSERT_EQ(static_cast<int>(p.counts.size()), n);
    std::int64_t total = 0;
    for (auto x : p.counts) total += x;
    EXPECT_EQ(total, n * (n - 1));
    EXPECT_EQ(p.counts, level_profile(g, g.antipodal_cell(c.id)).counts);
  }
}

TEST(ExpectedLevel, Coordinate) {
  const auto e = expected_level(build_graph(coordinate_arrangement()));
  ASSERT_EQ(e.size(), 3u);
  EXPECT_EQ(e[0].numerator, 24);
  EXPECT_EQ(e[0].denominator, 8);
  EXPECT_DOUBLE_EQ(e[0].value(), 3.0);
  EXPECT_DOUBLE_EQ(e[1].value(), 3.0);
  EXPECT_DOUBLE_EQ(e[2].value(), 0.0);
}

TEST(ExpectedLevel, BoundValues) {
  EXPECT_NEAR(expected_level_bound(0), 16 * kE, 1e-12);
  EXPECT_NEAR(expected_level_bound(0), 43.49, 0.01);
  EXPECT_NEAR(expected_level_bound(1), 97.858, 0.001);
}

TEST(ExpectedLevel, QuadraticBoundOnRandomArrangements) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto e = expected_level(random_graph(15, 900 + seed));
    for (int k = 0; k < 5; ++k) EXPECT_TRUE(e[k].at_most(expected_level_bound(k)));
  }
}

TEST(ExpectedLevel, ProfilesOverloadAgrees) {
  const auto g = random_graph(9, 3);
  const auto profiles = kernels::serial::all_level_profiles(g);
  const auto a = expected_level(g);
  const auto b = expected_level(profiles, static_cast<int>(g.cells().size()));
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].numerator, b[k].numerator);
    EXPECT_EQ(a[k].denominator, b[k].denominator);
  }
}

TEST(PairsCount, TwoCirclesKZero) {
  const auto g = two_circles();
  for (int c = 0; c < 2; ++c) EXPECT_EQ(pairs_count(g, c, Sign::Positive, 0), 4);
}

TEST(PairsCount, HemisphereBoundsAndUnionBound) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto g = random_graph(12, 700 + seed);
    const int n = g.circle_count();
    const auto table = kernels::serial::distance_table(g);
    const auto e = expected_level(g);
    for (int k = 0; k < n; ++k) {
      std::int64_t total = 0;
      for (int c = 0; c < n; ++c) {
        for (Sign s : {Sign::Positive, Sign::Negative}) {
          const auto count = pairs_count(g, table, c, s, k);
          EXPECT_EQ(count, pairs_count(g, c, s, k));
          if (k == 0) {
            EXPECT_LE(count, 4 * n);
          } else if (k <= 6) {
            EXPECT_LE(static_cast<double>(count), 2 * kE * k * (k + 1) * n);
          }
          total += count;
        }
      }
      if (k >= 1) EXPECT_LE(e[k].numerator, total) << "k=" << k;
    }
  }
}

TEST(BSet, CoordinateCounterexample) {
  // v = (0,0,1) lies on the two circles other than the equator, so every
  // lower octant is one crossing away. The claimed bound |B| <= k fails.
  const auto g = build_graph(coordinate_arrangement());
  const int v = vertex_at(g, {0, 0, 1});
  EXPECT_EQ(zone_distance(g, v, 2), 0);
  EXPECT_EQ(b_set_size(g, v, 2, Sign::Positive, 1), 4);
}

TEST(BSet, VertexOnCircleAtKOne) {
  // A vertex on C sees the two cells of C- at its corner at distance 0, and
  // exactly two further cells along C at distance 1.
  const auto g = random_graph(8, 4);
  for (const auto& v : g.vertices()) {
    for (int c : v.circles) {
      EXPECT_EQ(b_set_size(g, v.id, c, Sign::Positive, 1), 2);
    }
  }
}

TEST(BSet, TwoCirclesInZeroOne) {
  const auto g = two_circles();
  for (const auto& v : g.vertices()) {
    for (int c = 0; c < 2; ++c) {
      for (Sign s : {Sign::Positive, Sign::Negative}) {
        const int sv = g.vertex_sign(v.id, c);
        if (sv != 0 && sv != to_int(s)) continue;
        const int b = b_set_size(g, v.id, c, s, 1);
        EXPECT_GE(b, 0);
        EXPECT_LE(b, 1);
      }
    }
  }
}

TEST(BSet, Preconditions) {
  const auto g = build_graph(coordinate_arrangement());
  const int v = vertex_at(g, {0, 0, 1});
  EXPECT_THROW(b_set_size(g, v, 2, Sign::Negative, 1), PreconditionError);
  EXPECT_THROW(b_set_size(g, v, 2, Sign::Positive, 0), PreconditionError);
}

TEST(BSet, TableOverloadAgrees) {
  const auto g = random_graph(7, 5);
  const auto table = kernels::serial::distance_table(g);
  for (const auto& v : g.vertices()) {
    for (int c = 0; c < g.circle_count(); ++c) {
      const int sv = g.vertex_sign(v.id, c);
      const Sign s = sv < 0 ? Sign::Negative : Sign::Positive;
      for (int k = 1; k < 4; ++k) {
        EXPECT_EQ(b_set_size(g, v.id, c, s, k), b_set_size(g, table, v.id, c, s, k));
      }
    }
  }
}

TEST(ZoneDistance, OnCircleAndCoordinateExample) {
  const auto g = build_graph(coordinate_arrangement());
  for (const auto& v : g.vertices()) {
    for (int c : v.circles) EXPECT_EQ(zone_distance(g, v.id, c), 0);
  }
  EXPECT_EQ(zone_distance(g, vertex_at(g, {0, 0, 1}), 2), 0);
}

TEST(ZoneDistance, MatchesCoverageDepth) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const int n = 3 + static_cast<int>(seed % 6);
    const auto g = random_graph(n, 300 + seed);
    for (int c = 0; c < n; ++c) {
      const auto all = zone_distances(g, c);
      for (const auto& v : g.vertices()) {
        EXPECT_EQ(all[v.id], zone_distance(g, v.id, c));
        if (v.on_circle(c)) continue;
        const auto family = half_circles_of_vertex(g, v.id, c);
        const int expected = family.empty() ? 0 : min_coverage_depth(family);
        EXPECT_EQ(all[v.id], expected) << "n=" << n << " v=" << v.id << " c=" << c;
      }
    }
  }
}

TEST(ZoneDistance, AtMostDistanceToTouchingCells) {
  const auto g = random_graph(9, 6);
  for (int c = 0; c < g.circle_count(); ++c) {
    const auto zd = zone_distances(g, c);
    for (Sign s : {Sign::Positive, Sign::Negative}) {
      for (int f : cells_touching(g, c, s)) {
        for (const auto& v : g.vertices()) {
          EXPECT_LE(zd[v.id], vertex_cell_distance(g, v.id, f));
        }
      }
    }
  }
}

TEST(ZoneCount, ProfileAndBounds) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto g = random_graph(12, 800 + seed);
    const int n = g.circle_count();
    for (int c = 0; c < n; ++c) {
      const auto z = zone_profile(g, c, n);
      ASSERT_EQ(static_cast<int>(z.both.size()), n + 1);
      EXPECT_EQ(z.both[n], n * (n - 1));
      for (int j = 0; j <= n; ++j) {
        if (j > 0) {
          EXPECT_GE(z.both[j], z.both[j - 1]);
          EXPECT_GE(z.strict_plus[j], z.strict_plus[j - 1]);
          EXPECT_GE(z.strict_minus[j], z.strict_minus[j - 1]);
        }
        EXPECT_EQ(z.both[j], zone_count(g, c, j, ZoneSide::Both));
        EXPECT_EQ(z.strict_plus[j], zone_count(g, c, j, ZoneSide::StrictPlus));
        EXPECT_EQ(z.strict_minus[j], zone_count(g, c, j, ZoneSide::StrictMinus));
        // Vertices on C count only for `both`.
        EXPECT_EQ(z.both[j], z.strict_plus[j] + z.strict_minus[j] + 2 * (n - 1));
        EXPECT_LE(static_cast<double>(z.both[j]), sphere_zone_bound(j, n));
        EXPECT_LE(static_cast<double>(z.strict_plus[j]), strict_zone_bound(j, n));
        EXPECT_LE(static_cast<double>(z.strict_minus[j]), strict_zone_bound(j, n));
      }
    }
  }
}

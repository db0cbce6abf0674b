#include "kernel_bodies.hpp"

#include <cmath>
#include <numeric>

#include "spherelevels/errors.hpp"

namespace spherelevels::kernels {

std::uint64_t chunk_size(std::uint64_t samples, int chunks, int c) {
  const auto k = static_cast<std::uint64_t>(chunks);
  const auto idx = static_cast<std::uint64_t>(c);
  return samples / k + (idx < samples % k ? 1 : 0);
}

namespace body {

namespace {

int distance_by_signs(const ArrangementGraph& graph, int vertex, int cell) {
  const int n = graph.circle_count();
  const auto& cell_signs = graph.cells()[cell].sign_vector;
  int k = 0;
  for (int c = 0; c < n; ++c) {
    const std::int8_t vs = graph.vertex_sign(vertex, c);
    if (vs != 0 && vs != cell_signs[c]) ++k;
  }
  return k;
}

// Advances a sorted d-subset of [0, m) in lexicographic order.
bool next_subset(std::vector<int>& idx, int m) {
  const int d = static_cast<int>(idx.size());
  int i = d - 1;
  while (i >= 0 && idx[i] == m - d + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

}  // namespace

LevelProfile level_profile_of_cell(const ArrangementGraph& graph, int cell) {
  LevelProfile p{cell, std::vector<std::int64_t>(graph.circle_count(), 0)};
  const int vertices = static_cast<int>(graph.vertices().size());
  for (int v = 0; v < vertices; ++v) ++p.counts[distance_by_signs(graph, v, cell)];
  return p;
}

void distance_row(const ArrangementGraph& graph, int vertex, DistanceTable& table) {
  for (int f = 0; f < table.cells(); ++f) {
    table.set(vertex, f, distance_by_signs(graph, vertex, f));
  }
}

std::vector<std::uint64_t> mc_qk_chunk(int n, int d, std::uint64_t samples,
                                       RandomSeed seed, int chunk) {
  Rng rng(seed, static_cast<std::uint64_t>(chunk));
  const std::size_t dim = static_cast<std::size_t>(d) + 1;
  std::vector<double> normals(static_cast<std::size_t>(n) * dim);
  std::vector<double> p(dim);
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(n) + 1, 0);

  for (std::uint64_t s = 0; s < samples; ++s) {
    for (;;) {
      for (int i = 0; i < n; ++i) {
        sample_unit_vector_into(rng, std::span<double>(normals).subspan(i * dim, dim));
      }
      sample_unit_vector_into(rng, p);
      int k = 0;
      bool tie = false;
      for (int i = 0; i < n && !tie; ++i) {
        const std::span<const double> nrm(normals.data() + i * dim, dim);
        const Sign sp = side_of_dot(dot(nrm, p));
        const Sign ss = side_of_dot(-nrm[d]);  // south pole (0, ..., 0, -1)
        if (sp == Sign::Zero || ss == Sign::Zero) {
          tie = true;
        } else if (sp != ss) {
          ++k;
        }
      }
      if (!tie) {
        ++hist[k];
        break;
      }
    }
  }
  return hist;
}

LevelMoments mc_level_chunk(int m, int d, std::uint64_t samples, RandomSeed seed,
                            int chunk) {
  Rng rng(seed, static_cast<std::uint64_t>(chunk));
  const int levels = m - d + 1;
  LevelMoments out{0, std::vector<double>(levels, 0.0), std::vector<double>(levels, 0.0)};
  std::vector<std::int64_t> hist(levels);
  std::vector<UnitVector> normals(m);
  std::vector<UnitVector> subset(d);
  std::vector<Sign> south(m);

  for (std::uint64_t s = 0; s < samples; ++s) {
    for (;;) {
      bool degenerate = false;
      for (int i = 0; i < m; ++i) {
        normals[i] = sample_unit_vector(d, rng);
        south[i] = side_of_dot(-normals[i][d]);
        if (south[i] == Sign::Zero) degenerate = true;
      }
      if (degenerate) continue;

      std::fill(hist.begin(), hist.end(), 0);
      std::vector<int> idx(d);
      std::iota(idx.begin(), idx.end(), 0);
      do {
        for (int t = 0; t < d; ++t) subset[t] = normals[idx[t]];
        std::pair<UnitVector, UnitVector> vp;
        try {
          vp = vertex_pair(subset);
        } catch (const DegenerateError&) {
          degenerate = true;
          break;
        }
        int k = 0;
        int t = 0;
        for (int i = 0; i < m && !degenerate; ++i) {
          if (t < d && idx[t] == i) {
            ++t;
            continue;
          }
          const Sign sv = side(normals[i], vp.first);
          if (sv == Sign::Zero) {
            degenerate = true;
          } else if (sv != south[i]) {
            ++k;
          }
        }
        if (degenerate) break;
        // The antipode flips every non-incident sphere.
        ++hist[k];
        ++hist[(m - d) - k];
      } while (next_subset(idx, m));
      if (degenerate) continue;

      for (int k = 0; k < levels; ++k) {
        const auto h = static_cast<double>(hist[k]);
        out.sum[k] += h;
        out.sum_sq[k] += h * h;
      }
      ++out.samples;
      break;
    }
  }
  return out;
}

void merge_into(std::vector<std::uint64_t>& total, const std::vector<std::uint64_t>& part) {
  if (total.size() < part.size()) total.resize(part.size(), 0);
  for (std::size_t i = 0; i < part.size(); ++i) total[i] += part[i];
}

void merge_into(LevelMoments& total, const LevelMoments& part) {
  if (total.sum.size() < part.sum.size()) {
    total.sum.resize(part.sum.size(), 0.0);
    total.sum_sq.resize(part.sum_sq.size(), 0.0);
  }
  total.samples += part.samples;
  for (std::size_t i = 0; i < part.sum.size(); ++i) {
    total.sum[i] += part.sum[i];
    total.sum_sq[i] += part.sum_sq[i];
  }
}

}  // namespace body
}  // namespace spherelevels::kernels

#include <omp.h>

#include "kernel_bodies.hpp"
#include "spherelevels/errors.hpp"

namespace spherelevels::kernels::omp {

void set_threads(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

std::vector<LevelProfile> all_level_profiles(const ArrangementGraph& graph) {
  const int cells = static_cast<int>(graph.cells().size());
  std::vector<LevelProfile> out(cells);
#pragma omp parallel for schedule(static)
  for (int f = 0; f < cells; ++f) out[f] = body::level_profile_of_cell(graph, f);
  return out;
}

DistanceTable distance_table(const ArrangementGraph& graph) {
  DistanceTable table(static_cast<int>(graph.vertices().size()),
                      static_cast<int>(graph.cells().size()));
  const int vertices = table.vertices();
#pragma omp parallel for schedule(static)
  for (int v = 0; v < vertices; ++v) body::distance_row(graph, v, table);
  return table;
}

// Chunks run in any order; results are merged in ascending chunk index.
std::vector<std::uint64_t> mc_qk_histogram(int n, int d, std::uint64_t samples,
                                           RandomSeed seed, int chunks) {
  if (chunks < 1) throw PreconditionError("chunks must be >= 1");
  std::vector<std::vector<std::uint64_t>> parts(chunks);
#pragma omp parallel for schedule(dynamic, 1)
  for (int c = 0; c < chunks; ++c) {
    parts[c] = body::mc_qk_chunk(n, d, chunk_size(samples, chunks, c), seed, c);
  }
  std::vector<std::uint64_t> total(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& p : parts) body::merge_into(total, p);
  return total;
}

LevelMoments mc_level_moments(int m, int d, std::uint64_t samples, RandomSeed seed,
                              int chunks) {
  if (chunks < 1) throw PreconditionError("chunks must be >= 1");
  std::vector<LevelMoments> parts(chunks);
#pragma omp parallel for schedule(dynamic, 1)
  for (int c = 0; c < chunks; ++c) {
    parts[c] = body::mc_level_chunk(m, d, chunk_size(samples, chunks, c), seed, c);
  }
  LevelMoments total;
  for (const auto& p : parts) body::merge_into(total, p);
  return total;
}

}  // namespace spherelevels::kernels::omp

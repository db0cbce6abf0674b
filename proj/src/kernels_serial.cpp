#include "kernel_bodies.hpp"
#include "spherelevels/errors.hpp"

namespace spherelevels::kernels::serial {

std::vector<LevelProfile> all_level_profiles(const ArrangementGraph& graph) {
  const int cells = static_cast<int>(graph.cells().size());
  std::vector<LevelProfile> out;
  out.reserve(cells);
  for (int f = 0; f < cells; ++f) out.push_back(body::level_profile_of_cell(graph, f));
  return out;
}

DistanceTable distance_table(const ArrangementGraph& graph) {
  DistanceTable table(static_cast<int>(graph.vertices().size()),
                      static_cast<int>(graph.cells().size()));
  for (int v = 0; v < table.vertices(); ++v) body::distance_row(graph, v, table);
  return table;
}

std::vector<std::uint64_t> mc_qk_histogram(int n, int d, std::uint64_t samples,
                                           RandomSeed seed, int chunks) {
  if (chunks < 1) throw PreconditionError("chunks must be >= 1");
  std::vector<std::uint64_t> total(static_cast<std::size_t>(n) + 1, 0);
  for (int c = 0; c < chunks; ++c) {
    body::merge_into(total, body::mc_qk_chunk(n, d, chunk_size(samples, chunks, c), seed, c));
  }
  return total;
}

LevelMoments mc_level_moments(int m, int d, std::uint64_t samples, RandomSeed seed,
                              int chunks) {
  if (chunks < 1) throw PreconditionError("chunks must be >= 1");
  LevelMoments total;
  for (int c = 0; c < chunks; ++c) {
    body::merge_into(total,
                     body::mc_level_chunk(m, d, chunk_size(samples, chunks, c), seed, c));
  }
  return total;
}

}  // namespace spherelevels::kernels::serial

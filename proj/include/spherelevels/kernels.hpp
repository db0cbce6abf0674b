#pragma once

// Data-parallel kernels. Each kernel exists twice: a plain serial reference
// in `kernels::serial` and an OpenMP version in `kernels::omp`. Both produce
// bit-identical results; the serial one is kept for testing and benchmarks.

#include <cstdint>
#include <vector>

#include "spherelevels/arrangement.hpp"
#include "spherelevels/levels.hpp"
#include "spherelevels/sphere_core.hpp"

namespace spherelevels::kernels {

/// Per-k sums over sampled arrangements of the number of vertices at level k,
/// and of its square.
struct LevelMoments {
  std::uint64_t samples = 0;
  std::vector<double> sum;
  std::vector<double> sum_sq;

  bool operator==(const LevelMoments&) const = default;
};

/// Samples assigned to chunk c when `samples` are split over `chunks`.
std::uint64_t chunk_size(std::uint64_t samples, int chunks, int c);

namespace serial {

std::vector<LevelProfile> all_level_profiles(const ArrangementGraph& graph);
DistanceTable distance_table(const ArrangementGraph& graph);

/// Histogram over k in [0, n] of the number of the n random spheres
/// separating a random point from the south pole.
std::vector<std::uint64_t> mc_qk_histogram(int n, int d, std::uint64_t samples,
                                           RandomSeed seed, int chunks);

/// Level tallies of all 2 C(m, d) vertices of random m-sphere arrangements.
LevelMoments mc_level_moments(int m, int d, std::uint64_t samples, RandomSeed seed,
                              int chunks);

}  // namespace serial

namespace omp {

std::vector<LevelProfile> all_level_profiles(const ArrangementGraph& graph);
DistanceTable distance_table(const ArrangementGraph& graph);
std::vector<std::uint64_t> mc_qk_histogram(int n, int d, std::uint64_t samples,
                                           RandomSeed seed, int chunks);
LevelMoments mc_level_moments(int m, int d, std::uint64_t samples, RandomSeed seed,
                              int chunks);

/// Caps the OpenMP worker count (0 leaves the runtime default).
void set_threads(int threads);

}  // namespace omp

}  // namespace spherelevels::kernels

#include <gtest/gtest.h>

#include "spherelevels/kernels.hpp"
#include "spherelevels/levels.hpp"
#include "test_util.hpp"

using namespace spherelevels;
using namespace spherelevels::testing;

namespace {

class KernelThreads : public ::testing::TestWithParam<int> {
 protected:
  void SetUp() override { kernels::omp::set_threads(GetParam()); }
  void TearDown() override { kernels::omp::set_threads(1); }
};

}  // namespace

TEST(ChunkSize, PartitionsSamples) {
  for (std::uint64_t samples : {0ull, 1ull, 10ull, 1001ull}) {
    for (int chunks : {1, 3, 8}) {
      std::uint64_t total = 0;
      for (int c = 0; c < chunks; ++c) total += kernels::chunk_size(samples, chunks, c);
      EXPECT_EQ(total, samples);
    }
  }
}

TEST_P(KernelThreads, LevelProfiles) {
  const auto g = random_graph(12, 31);
  const auto a = kernels::serial::all_level_profiles(g);
  const auto b = kernels::omp::all_level_profiles(g);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t f = 0; f < a.size(); ++f) {
    EXPECT_EQ(a[f].cell, b[f].cell);
    EXPECT_EQ(a[f].counts, b[f].counts);
    EXPECT_EQ(a[f].counts, level_profile(g, static_cast<int>(f)).counts);
  }
}

TEST_P(KernelThreads, DistanceTable) {
  const auto g = random_graph(10, 32);
  const auto a = kernels::serial::distance_table(g);
  EXPECT_EQ(a, kernels::omp::distance_table(g));
  for (const auto& v : g.vertices()) {
    for (const auto& c : g.cells()) EXPECT_EQ(a.at(v.id, c.id), vertex_cell_distance(g, v.id, c.id));
  }
}

TEST_P(KernelThreads, McQkHistogram) {
  const auto a = kernels::serial::mc_qk_histogram(9, 2, 20000, RandomSeed{5}, 13);
  const auto b = kernels::omp::mc_qk_histogram(9, 2, 20000, RandomSeed{5}, 13);
  EXPECT_EQ(a, b);
}

TEST_P(KernelThreads, McLevelMoments) {
  const auto a = kernels::serial::mc_level_moments(9, 3, 300, RandomSeed{6}, 5);
  const auto b = kernels::omp::mc_level_moments(9, 3, 300, RandomSeed{6}, 5);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.samples, 300u);
}

INSTANTIATE_TEST_SUITE_P(Threads, KernelThreads, ::testing::Values(1, 2, 8));

TEST(Kernels, ChunkCountChangesStreams) {
  const auto a = kernels::serial::mc_qk_histogram(5, 2, 5000, RandomSeed{5}, 2);
  const auto b = kernels::serial::mc_qk_histogram(5, 2, 5000, RandomSeed{5}, 3);
  EXPECT_NE(a, b);
}

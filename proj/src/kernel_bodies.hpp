#pragma once

// Loop bodies shared by the serial and OpenMP kernels. Everything here works
// on one independent unit (a cell, a vertex, a chunk) so that both drivers
// only differ in how they schedule units.

#include <cstdint>
#include <vector>

#include "spherelevels/kernels.hpp"

namespace spherelevels::kernels::body {

LevelProfile level_profile_of_cell(const ArrangementGraph& graph, int cell);

void distance_row(const ArrangementGraph& graph, int vertex, DistanceTable& table);

std::vector<std::uint64_t> mc_qk_chunk(int n, int d, std::uint64_t samples,
                                       RandomSeed seed, int chunk);

LevelMoments mc_level_chunk(int m, int d, std::uint64_t samples, RandomSeed seed,
                            int chunk);

void merge_into(std::vector<std::uint64_t>& total, const std::vector<std::uint64_t>& part);
void merge_into(LevelMoments& total, const LevelMoments& part);

}  // namespace spherelevels::kernels::body

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "spherelevels/sphere_core.hpp"

namespace spherelevels {

// Arrangement file: {"dimension": d, "normals": [[x0, ..., xd], ...]}.
// Normals must be unit within 1e-9; they are re-normalized on load.

GreatSphereArrangement parse_arrangement(std::string_view text);
GreatSphereArrangement load_arrangement(const std::filesystem::path& path);

std::string serialize_arrangement(const GreatSphereArrangement& arr);
void save_arrangement(const GreatSphereArrangement& arr, const std::filesystem::path& path);

/// n normals drawn uniformly from S^d.
GreatSphereArrangement random_arrangement(int d, int n, RandomSeed seed);

}  // namespace spherelevels

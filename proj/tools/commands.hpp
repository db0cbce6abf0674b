#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace spherelevels::cli {

struct Flags {
  int d = 2;
  std::optional<int> n;
  std::optional<int> m;
  std::optional<int> k;
  std::optional<int> kmax;
  std::optional<int> j;
  std::optional<int> jmax;
  std::optional<std::uint64_t> samples;
  std::optional<int> trials;
  std::uint64_t seed = 0;
  int chunks = 64;
  int threads = 0;
  double tol = 1e-10;
  std::optional<std::string> in;
  std::optional<std::string> out;
  std::string side = "both";
  std::optional<int> circle;
  std::string mode = "line";
  bool build = false;
};

// Each returns the process exit code: 0 success, 1 a checked bound failed.
// Input problems surface as spherelevels::Error and map to 2 in main.
int cmd_gen(const Flags& f);
int cmd_stats(const Flags& f);
int cmd_verify(const Flags& f);
int cmd_zones(const Flags& f);
int cmd_cliques(const Flags& f);
int cmd_qk(const Flags& f);
int cmd_mc_qk(const Flags& f);
int cmd_mc_levels(const Flags& f);

}  // namespace spherelevels::cli

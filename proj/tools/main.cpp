#include <exception>
#include <functional>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "spherelevels/errors.hpp"
#include "spherelevels/kernels.hpp"

namespace cli = spherelevels::cli;

namespace {

struct Subcommand {
  const char* name;
  const char* help;
  int (*run)(const cli::Flags&);
  const char* flags;  // space separated long flags this command accepts
};

constexpr Subcommand kCommands[] = {
    {"gen", "Write a random arrangement file", cli::cmd_gen, "d n seed out build threads"},
    {"stats", "Level profiles and expected levels of an arrangement", cli::cmd_stats,
     "in out threads"},
    {"verify", "Check every bound on a file or a generated batch", cli::cmd_verify,
     "in n trials seed threads"},
    {"zones", "Zone counts of the circles of an arrangement", cli::cmd_zones,
     "in circle j jmax side out threads"},
    {"cliques", "Clique lemma checks on random families", cli::cmd_cliques,
     "mode n k trials seed threads out"},
    {"qk", "Quadrature and bounds for q_k", cli::cmd_qk,
     "d n kmax tol samples seed chunks threads out"},
    {"mc-qk", "Monte Carlo estimate of q_k next to quadrature", cli::cmd_mc_qk,
     "d n kmax tol samples seed chunks threads out"},
    {"mc-levels", "Monte Carlo expected level sizes in random arrangements",
     cli::cmd_mc_levels, "d m kmax tol samples seed chunks threads out"},
};

bool accepts(const Subcommand& c, const std::string& flag) {
  const std::string list = std::string(" ") + c.flags + " ";
  return list.find(" " + flag + " ") != std::string::npos;
}

void add_flags(CLI::App* sub, const Subcommand& c, cli::Flags& f) {
  auto opt = [&](const char* name, auto& target, const char* help) {
    if (accepts(c, name)) sub->add_option(std::string("--") + name, target, help);
  };
  opt("d", f.d, "sphere dimension");
  opt("n", f.n, "number of circles, spheres, or family size");
  opt("m", f.m, "number of spheres");
  opt("k", f.k, "level or clique size");
  opt("kmax", f.kmax, "largest k reported");
  opt("j", f.j, "single zone depth");
  opt("jmax", f.jmax, "largest zone depth");
  opt("samples", f.samples, "Monte Carlo samples");
  opt("trials", f.trials, "random trials");
  opt("seed", f.seed, "random seed (default 0)");
  opt("chunks", f.chunks, "Monte Carlo chunks (default 64)");
  opt("threads", f.threads, "worker cap (0 = runtime default)");
  opt("tol", f.tol, "quadrature tolerance (default 1e-10)");
  opt("in", f.in, "arrangement file");
  opt("out", f.out, "output path");
  opt("circle", f.circle, "circle index");
  if (accepts(c, "side")) {
    sub->add_option("--side", f.side, "both, plus or minus")
        ->check(CLI::IsMember({"both", "plus", "minus"}));
  }
  if (accepts(c, "mode")) {
    sub->add_option("--mode", f.mode, "line or circle")->check(CLI::IsMember({"line", "circle"}));
  }
  if (accepts(c, "build")) sub->add_flag("--build", f.build, "also build the arrangement graph");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Levels and zones in arrangements of great spheres"};
  app.require_subcommand(1);
  cli::Flags flags;
  const Subcommand* chosen = nullptr;
  for (const auto& c : kCommands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_flags(sub, c, flags);
    sub->callback([&chosen, &c] { chosen = &c; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    spherelevels::kernels::omp::set_threads(flags.threads);
    return chosen->run(flags);
  } catch (const spherelevels::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

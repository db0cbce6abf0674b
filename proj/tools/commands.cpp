#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <limits>
#include <numbers>
#include <vector>

#include "spherelevels/arrangement.hpp"
#include "spherelevels/arrangement_io.hpp"
#include "spherelevels/cliques.hpp"
#include "spherelevels/csv.hpp"
#include "spherelevels/errors.hpp"
#include "spherelevels/kernels.hpp"
#include "spherelevels/levels.hpp"
#include "spherelevels/random_model.hpp"

namespace spherelevels::cli {

namespace {

namespace fs = std::filesystem;

constexpr double kE = std::numbers::e;
constexpr double kPi = std::numbers::pi;

template <typename T>
T require(const std::optional<T>& value, const char* flag) {
  if (!value) throw PreconditionError(std::string("--") + flag + " is required");
  return *value;
}

std::string str(std::int64_t x) { return std::to_string(x); }

std::string output_path(const Flags& f, const char* fallback) {
  return f.out.value_or(fallback);
}

ArrangementGraph load_graph(const Flags& f) {
  const auto arr = load_arrangement(require(f.in, "in"));
  if (arr.dimension != 2) throw BuildError("expected a d=2 arrangement file");
  return build_graph(arr);
}

// Tracks one named check over many cases: whether it held and the case
// closest to (or furthest past) its bound.
class Check {
 public:
  explicit Check(std::string name) : name_(std::move(name)) {}

  void record(double observed, double bound, const std::string& where) {
    record(observed, bound, where, observed <= bound);
  }

  void record(double observed, double bound, const std::string& where, bool ok) {
    ++cases_;
    const double slack = bound - observed;
    if (!ok && ok_) {
      ok_ = false;
      first_failure_ = where + ": observed " + csv::real(observed) + " > " + csv::real(bound);
    }
    if (slack < worst_slack_) {
      worst_slack_ = slack;
      worst_ = "observed " + csv::real(observed) + " vs bound " + csv::real(bound) + " at " +
               where;
    }
  }

  bool ok() const { return ok_; }

  void print(std::ostream& os) const {
    os << (ok_ ? "PASS " : "FAIL ") << name_ << " cases=" << cases_;
    if (cases_ > 0) os << " tightest: " << worst_;
    os << "\n";
    if (!ok_) os << "  first failure: " << first_failure_ << "\n";
  }

 private:
  std::string name_;
  bool ok_ = true;
  std::int64_t cases_ = 0;
  double worst_slack_ = std::numeric_limits<double>::infinity();
  std::string worst_;
  std::string first_failure_;
};

struct VerifyChecks {
  Check structure{"structure V=n(n-1) E=2n(n-1) F=n(n-1)+2 V-E+F=2"};
  Check oracle{"distance equals BFS oracle"};
  Check theorem{"E_k <= 4e(k+2)^2 for k < n/3"};
  Check f0{"|F_0(C^s)| <= 4n"};
  Check fk{"|F_k(C^s)| <= 2e k(k+1) n"};
  Check bset{"|B_{C^s}(v)| <= k"};
  Check zone_strict{"strict-side zone <= 2e(j+2)n"};
  Check zone_both{"zone <= 4e(j+2)n"};
  Check zone_depth{"zone distance equals coverage depth"};
  Check circle_cliques{"half-circle k-cliques <= k+1 for |H| > 3k"};

  std::vector<const Check*> all() const {
    return {&structure, &oracle, &theorem,   &f0,         &fk,
            &bset,      &zone_strict, &zone_both, &zone_depth, &circle_cliques};
  }
};

void verify_graph(const ArrangementGraph& g, const std::string& label, VerifyChecks& c) {
  const int n = g.circle_count();
  const auto nv = static_cast<std::int64_t>(g.vertices().size());
  const auto ne = static_cast<std::int64_t>(g.arcs().size());
  const auto nf = static_cast<std::int64_t>(g.cells().size());
  const std::int64_t bad_counts = (nv != n * (n - 1)) + (ne != 2 * n * (n - 1)) +
                                  (nf != n * (n - 1) + 2) + (nv - ne + nf != 2);
  c.structure.record(static_cast<double>(bad_counts), 0, label);

  const DistanceTable table = kernels::omp::distance_table(g);
  std::int64_t mismatches = 0;
  for (const auto& v : g.vertices()) {
    const auto bfs = bfs_distances_from_vertex(g, v.id);
    for (const auto& cell : g.cells()) mismatches += table.at(v.id, cell.id) != bfs[cell.id];
  }
  c.oracle.record(static_cast<double>(mismatches), 0, label);

  std::vector<LevelProfile> profiles(g.cells().size());
  for (const auto& cell : g.cells()) {
    auto& p = profiles[cell.id];
    p.cell = cell.id;
    p.counts.assign(n, 0);
    for (const auto& v : g.vertices()) ++p.counts[table.at(v.id, cell.id)];
  }
  const auto expected = expected_level(profiles, static_cast<int>(nf));
  for (int k = 0; 3 * k < n; ++k) {
    const double bound = expected_level_bound(k);
    c.theorem.record(expected[k].value(), bound, label + " k=" + str(k),
                     expected[k].at_most(bound));
  }

  for (int circle = 0; circle < n; ++circle) {
    const auto zd = zone_distances(g, circle);
    for (Sign s : {Sign::Positive, Sign::Negative}) {
      const std::string where = label + " C=" + str(circle) + (s == Sign::Positive ? "+" : "-");
      for (int k = 0; k < n; ++k) {
        const auto count = static_cast<double>(pairs_count(g, table, circle, s, k));
        if (k == 0) {
          c.f0.record(count, 4.0 * n, where);
        } else {
          c.fk.record(count, 2 * kE * k * (k + 1) * n, where + " k=" + str(k));
        }
      }
      for (const auto& v : g.vertices()) {
        const int sv = g.vertex_sign(v.id, circle);
        if (sv != 0 && sv != to_int(s)) continue;
        for (int k = std::max(1, zd[v.id] + 1); k < n; ++k) {
          c.bset.record(b_set_size(g, table, v.id, circle, s, k), k,
                        where + " v=" + str(v.id) + " k=" + str(k));
        }
      }
    }

    const ZoneProfile z = zone_profile(g, circle, n);
    for (int j = 0; j <= n; ++j) {
      const std::string where = label + " C=" + str(circle) + " j=" + str(j);
      c.zone_both.record(static_cast<double>(z.both[j]), sphere_zone_bound(j, n), where);
      c.zone_strict.record(static_cast<double>(z.strict_plus[j]), strict_zone_bound(j, n),
                           where + " +");
      c.zone_strict.record(static_cast<double>(z.strict_minus[j]), strict_zone_bound(j, n),
                           where + " -");
    }

    for (const auto& v : g.vertices()) {
      if (v.on_circle(circle)) continue;
      const auto family = half_circles_of_vertex(g, v.id, circle);
      const std::string where = label + " C=" + str(circle) + " v=" + str(v.id);
      const int depth = family.empty() ? 0 : min_coverage_depth(family);
      c.zone_depth.record(std::abs(depth - zd[v.id]), 0, where);
      const auto counts = clique_counts_circle(family);
      const int h = static_cast<int>(family.size());
      for (int k = 0; 3 * k < h; ++k) {
        c.circle_cliques.record(static_cast<double>(counts[k]), k + 1.0,
                                where + " k=" + str(k));
      }
    }
  }
}

void write_qk_csv(const QkTable& table, const std::string& path) {
  csv::Writer w(path, {"k", "q_exact", "q_lower", "q_upper", "q_mc", "stderr"});
  for (const auto& r : table.rows) {
    w.row({str(r.k), csv::real(r.q_exact), csv::real(r.q_lower), csv::real(r.q_upper),
           csv::real(r.q_mc), csv::real(r.stderr_mc)});
  }
  w.close();
}

McQk run_mc_qk(const Flags& f, int n) {
  McOptions opts;
  opts.samples = require(f.samples, "samples");
  opts.seed = RandomSeed{f.seed};
  opts.chunks = f.chunks;
  return mc_qk(n, f.d, opts);
}

}  // namespace

int cmd_gen(const Flags& f) {
  const int n = require(f.n, "n");
  if (f.d < 1) throw PreconditionError("--d must be >= 1");
  const auto arr = random_arrangement(f.d, n, RandomSeed{f.seed});
  if (f.build) build_graph(arr);
  if (f.out) {
    save_arrangement(arr, *f.out);
  } else {
    std::cout << serialize_arrangement(arr);
  }
  return 0;
}

int cmd_stats(const Flags& f) {
  const ArrangementGraph g = load_graph(f);
  const int n = g.circle_count();
  const auto profiles = kernels::omp::all_level_profiles(g);
  const auto expected = expected_level(profiles, static_cast<int>(g.cells().size()));

  const std::string prefix = f.out.value_or(".");
  const bool as_dir = fs::is_directory(prefix) || prefix.ends_with('/');
  auto target = [&](const char* name) {
    return as_dir ? (fs::path(prefix) / name).string() : prefix + name;
  };

  csv::Writer levels(target("levels.csv"), {"cell_id", "k", "count"});
  for (const auto& p : profiles) {
    for (int k = 0; k < n; ++k) levels.row({str(p.cell), str(k), str(p.counts[k])});
  }
  levels.close();

  csv::Writer table(target("expected.csv"), {"k", "expected", "bound_4e(k+2)^2", "margin"});
  int violations = 0;
  for (const auto& e : expected) {
    const double bound = expected_level_bound(e.k);
    table.row({str(e.k), csv::real(e.value()), csv::real(bound), csv::real(bound - e.value())});
    if (3 * e.k < n && !e.at_most(bound)) ++violations;
  }
  table.close();

  std::cout << "cells=" << g.cells().size() << " vertices=" << g.vertices().size()
            << " theorem-range violations=" << violations << "\n";
  return 0;
}

int cmd_verify(const Flags& f) {
  VerifyChecks checks;
  int graphs = 0;
  if (f.in) {
    verify_graph(load_graph(f), *f.in, checks);
    graphs = 1;
  } else {
    const int trials = f.trials.value_or(20);
    const int nmax = f.n.value_or(10);
    if (trials < 1) throw PreconditionError("--trials must be >= 1");
    if (nmax < 3) throw PreconditionError("--n must be >= 3 in batch mode");
    for (int t = 0; t < trials; ++t) {
      const int n = 3 + t % (nmax - 2);
      const auto arr = random_arrangement(2, n, RandomSeed{mix_seed(f.seed, t)});
      verify_graph(build_graph(arr), "trial " + str(t) + " n=" + str(n), checks);
    }
    graphs = trials;
  }

  int failed = 0;
  for (const Check* c : checks.all()) {
    c->print(std::cout);
    failed += !c->ok();
  }
  std::cout << "verified " << graphs << " arrangement(s): " << failed << " check(s) failed\n";
  return failed == 0 ? 0 : 1;
}

int cmd_zones(const Flags& f) {
  const ArrangementGraph g = load_graph(f);
  const int n = g.circle_count();
  std::vector<int> circles;
  if (f.circle) {
    if (*f.circle < 0 || *f.circle >= n) throw PreconditionError("--circle out of range");
    circles.push_back(*f.circle);
  } else {
    for (int c = 0; c < n; ++c) circles.push_back(c);
  }
  const int jmax = f.j.value_or(f.jmax.value_or(n));
  const int jmin = f.j.value_or(0);
  if (jmin < 0 || jmax < jmin) throw PreconditionError("zone depth must be >= 0");

  std::vector<std::string> header = {"circle", "j"};
  if (f.side == "both") {
    header.insert(header.end(), {"both", "strict_plus", "strict_minus", "bound_both",
                                 "bound_strict"});
  } else {
    header.insert(header.end(), {f.side == "plus" ? "strict_plus" : "strict_minus",
                                 "bound_strict"});
  }
  csv::Writer w(output_path(f, "zones.csv"), header);
  int violations = 0;
  for (int c : circles) {
    const ZoneProfile z = zone_profile(g, c, jmax);
    for (int j = jmin; j <= jmax; ++j) {
      const double both_bound = sphere_zone_bound(j, n);
      const double strict_bound = strict_zone_bound(j, n);
      if (f.side == "both") {
        violations += z.both[j] > both_bound;
        violations += z.strict_plus[j] > strict_bound;
        violations += z.strict_minus[j] > strict_bound;
        w.row({str(c), str(j), str(z.both[j]), str(z.strict_plus[j]), str(z.strict_minus[j]),
               csv::real(both_bound), csv::real(strict_bound)});
      } else {
        const auto count = f.side == "plus" ? z.strict_plus[j] : z.strict_minus[j];
        violations += count > strict_bound;
        w.row({str(c), str(j), str(count), csv::real(strict_bound)});
      }
    }
  }
  w.close();
  std::cout << "zone bound violations=" << violations << "\n";
  return violations == 0 ? 0 : 1;
}

int cmd_cliques(const Flags& f) {
  const bool line = f.mode == "line";
  const int n = f.n.value_or(line ? 200 : 100);
  const int trials = f.trials.value_or(1000);
  if (n < 1 || trials < 1) throw PreconditionError("--n and --trials must be >= 1");
  if (f.k && (*f.k < 0 || *f.k > n)) throw PreconditionError("--k out of range");

  std::vector<std::vector<std::int64_t>> per_trial(trials);
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < trials; ++t) {
    Rng rng(RandomSeed{f.seed}, static_cast<std::uint64_t>(t));
    if (line) {
      std::vector<HalfInterval> family(n);
      for (auto& h : family) {
        h.kind = rng.uniform() < 0.5 ? HalfIntervalKind::Left : HalfIntervalKind::Right;
        h.endpoint = rng.normal();
      }
      per_trial[t] = clique_counts_line(family);
    } else {
      std::vector<HalfCircle> family(n);
      for (auto& h : family) h = HalfCircle::centered_at(2 * kPi * rng.uniform());
      per_trial[t] = clique_counts_circle(family);
    }
  }

  std::vector<std::int64_t> worst(n + 1, 0);
  for (const auto& counts : per_trial) {
    for (int k = 0; k <= n; ++k) worst[k] = std::max(worst[k], counts[k]);
  }

  const int kmin = f.k.value_or(0);
  const int kmax = f.k.value_or(n);
  int violations = 0;
  std::optional<csv::Writer> w;
  if (f.out) w.emplace(*f.out, std::vector<std::string>{"k", "max_count", "bound"});
  for (int k = kmin; k <= kmax; ++k) {
    const bool asserted = line || 3 * k < n;
    if (asserted && worst[k] > k + 1) ++violations;
    if (w) w->row({str(k), str(worst[k]), asserted ? str(k + 1) : ""});
  }
  if (w) w->close();
  std::cout << f.mode << " families: trials=" << trials << " n=" << n
            << " violations=" << violations << "\n";
  return violations == 0 ? 0 : 1;
}

int cmd_qk(const Flags& f) {
  const int n = require(f.n, "n");
  const int kmax = f.kmax.value_or(n);
  std::optional<McQk> mc;
  if (f.samples) mc = run_mc_qk(f, n);
  const QkTable table = qk_table(n, f.d, kmax, f.tol, mc ? &*mc : nullptr);
  write_qk_csv(table, output_path(f, "qk.csv"));
  return 0;
}

int cmd_mc_qk(const Flags& f) {
  const int n = require(f.n, "n");
  const McQk mc = run_mc_qk(f, n);
  const QkTable table = qk_table(n, f.d, f.kmax.value_or(n), f.tol, &mc);
  write_qk_csv(table, output_path(f, "qk.csv"));
  double worst = 0.0;
  for (const auto& r : table.rows) {
    if (*r.stderr_mc > 0) worst = std::max(worst, std::abs(*r.q_mc - r.q_exact) / *r.stderr_mc);
  }
  std::cout << "samples=" << mc.samples << " max |q_mc - q_exact| / stderr = "
            << csv::real(worst) << "\n";
  return 0;
}

int cmd_mc_levels(const Flags& f) {
  const int m = require(f.m, "m");
  McLevelOptions opts;
  opts.samples = require(f.samples, "samples");
  opts.seed = RandomSeed{f.seed};
  opts.chunks = f.chunks;
  opts.kmax = f.kmax;
  opts.tol = f.tol;
  const LevelEstimates est = mc_level(m, f.d, opts);

  csv::Writer w(output_path(f, "levels_mc.csv"),
                {"k", "mc_mean", "mc_stderr", "analytic", "ratio_to_(k+1)^(d-1)"});
  for (const auto& r : est.rows) {
    w.row({str(r.k), csv::real(r.mc_mean), csv::real(r.mc_stderr), csv::real(r.analytic),
           csv::real(r.ratio())});
  }
  if (est.overflow) {
    const auto& o = *est.overflow;
    w.row({"overflow", csv::real(o.mc_mean), csv::real(o.mc_stderr), csv::real(o.analytic), ""});
  }
  w.close();
  return 0;
}

}  // namespace spherelevels::cli

// Command-line front end: input generators, the three benchmark drivers
// (CSV out), and one-shot hull / point-location runs on pointset files.

#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "dynhull/bench.hpp"
#include "dynhull/errors.hpp"
#include "dynhull/generators.hpp"
#include "dynhull/geometry.hpp"
#include "dynhull/hull.hpp"
#include "dynhull/matrix.hpp"
#include "dynhull/scalar.hpp"

namespace {

using namespace dynhull;

// Writes to --out when given, stdout otherwise.
struct OutFile {
  explicit OutFile(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw Error("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file.is_open() ? file : std::cout; }
  std::ofstream file;
};

std::vector<Scenario> to_scenarios(const std::vector<std::string>& raw) {
  std::vector<Scenario> out;
  for (const auto& s : raw) out.push_back(parse_scenario(s));
  return out;
}

PredicateMode to_mode(const std::string& s) {
  if (s == "auto") return PredicateMode::Auto;
  if (s == "hashed") return PredicateMode::Hashed;
  if (s == "laplace") return PredicateMode::Laplace;
  throw InvalidScenario("unknown predicate mode: " + s + " (auto|hashed|laplace)");
}

PointSet<ExactRat> widen(const PointSet<ExactInt>& ps) {
  PointSet<ExactRat> out(ps.dim);
  for (const auto& p : ps.pts) {
    std::vector<ExactRat> q;
    q.reserve(p.size());
    for (const auto& x : p) q.emplace_back(x);
    out.add(std::move(q));
  }
  return out;
}

template <class S>
void emit_chain(std::ostream& out, const MatrixChain<S>& ch, Scenario sc) {
  const int d = ch.base.dim();
  out << d << ' ' << ch.updates.size() << ' ' << scenario_tag(sc) << '\n';
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) out << (j ? " " : "") << ch.base(i, j).str();
    out << '\n';
  }
  for (const auto& u : ch.updates) {
    out << u.col;
    for (const auto& v : u.values) out << ' ' << v.str();
    out << '\n';
  }
}

template <class S>
void print_hull(const PointSet<S>& ps, PredicateMode mode, int threshold_dim) {
  HullConfig cfg;
  cfg.predicate_mode = mode;
  cfg.threshold_dim = threshold_dim;
  auto tri = convex_hull(ps, cfg);
  const auto verts = tri.hull_vertices();
  std::cout << "vertices " << verts.size() << ":";
  for (VertexId v : verts) std::cout << ' ' << v;
  std::cout << "\nvolume " << tri.volume().str() << '\n';
  const auto st = tri.stats();
  std::cout << "cells " << st.t_cells << ", boundary facets " << st.n_facets << '\n';
}

template <class S>
void run_locate(const PointSet<S>& build, const PointSet<S>& queries, bool scratch,
                int threshold_dim) {
  if (queries.dim != build.dim) throw DimensionMismatch("query dimension != build dimension");
  HullConfig cfg;
  cfg.predicate_mode = scratch ? PredicateMode::Auto : PredicateMode::Hashed;
  cfg.threshold_dim = threshold_dim;
  auto tri = convex_hull(build, cfg);
  CellId hint = 0;
  for (std::size_t i = 0; i < queries.size(); ++i) {
    const std::span<const S> q(queries[i]);
    const CellId cell = scratch ? tri.locate_scratch(q, StaticDetKind::Auto, hint)
                                : tri.locate(q, hint);
    if (cell == kOutsideCell) {
      std::cout << "outside\n";
    } else {
      std::cout << cell << '\n';
      hint = cell;
    }
  }
}

AnyPointSet read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open pointset file: " + path);
  return read_pointset(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact dynamic-determinant hulls: generators, benchmarks, one-shot runs"};
  app.require_subcommand(1);

  long n = 0;
  int dim = 0;
  std::string scenario = "d";
  std::string dist = "cube";
  std::uint64_t seed = 1;
  std::string out_path;

  auto* gen_points_cmd = app.add_subcommand("gen-points", "write a random pointset");
  gen_points_cmd->add_option("--n", n, "number of points")->required();
  gen_points_cmd->add_option("--dim", dim, "dimension")->required();
  gen_points_cmd->add_option("--dist", dist, "cube|ball|sphere");
  gen_points_cmd->add_option("--scenario", scenario, "a|b|c|d (sets the coordinate grid)");
  gen_points_cmd->add_option("--seed", seed, "random seed");
  gen_points_cmd->add_option("--out", out_path, "output file (default stdout)");

  int updates = 0;
  auto* gen_matrix_cmd =
      app.add_subcommand("gen-matrix", "write a random matrix and update chain");
  gen_matrix_cmd->add_option("--dim", dim, "dimension")->required();
  gen_matrix_cmd->add_option("--scenario", scenario, "a|b|c|d");
  gen_matrix_cmd->add_option("--updates", updates, "number of column replacements");
  gen_matrix_cmd->add_option("--seed", seed, "random seed");
  gen_matrix_cmd->add_option("--out", out_path, "output file (default stdout)");

  std::vector<int> dims{3, 4, 5, 6, 7, 8};
  std::vector<std::string> scenarios{"d"};
  std::vector<std::string> algos;
  std::uint64_t trials = 0;
  std::uint64_t budget_ms = 0;
  auto* bench_det_cmd = app.add_subcommand("bench-det", "time the determinant algorithms");
  bench_det_cmd->add_option("--dim", dims, "dimensions")->delimiter(',');
  bench_det_cmd->add_option("--scenario", scenarios, "coefficient scenarios")->delimiter(',');
  bench_det_cmd->add_option("--algo", algos, "laplace,bird,lu,dynadj,dyninv (default all)")
      ->delimiter(',');
  bench_det_cmd->add_option("--trials", trials, "trials per batch (0: scenario default)");
  bench_det_cmd->add_option("--budget-ms", budget_ms, "per-batch budget (0: unlimited)");
  bench_det_cmd->add_option("--seed", seed, "random seed");
  bench_det_cmd->add_option("--out", out_path, "CSV file (default stdout)");

  std::vector<long> n_list{12};
  int threshold_dim = 6;
  std::string hull_dist = "sphere";
  auto* bench_hull_cmd = app.add_subcommand("bench-hull", "time hull construction");
  bench_hull_cmd->add_option("--dim", dims, "dimensions")->delimiter(',');
  bench_hull_cmd->add_option("--n", n_list, "input sizes")->delimiter(',');
  bench_hull_cmd->add_option("--dist", hull_dist, "cube|ball|sphere");
  bench_hull_cmd->add_option("--scenario", scenario, "a|b|c|d (sets the coordinate grid)");
  bench_hull_cmd->add_option("--algo", algos, "hashed-z,hashed-q,laplace (default all)")
      ->delimiter(',');
  bench_hull_cmd->add_option("--threshold-dim", threshold_dim, "hashing threshold");
  bench_hull_cmd->add_option("--seed", seed, "random seed");
  bench_hull_cmd->add_option("--budget-ms", budget_ms, "per-variant budget (0: unlimited)");
  bench_hull_cmd->add_option("--out", out_path, "CSV file (default stdout)");

  std::string build_dist = "sphere";
  auto* bench_locate_cmd =
      app.add_subcommand("bench-locate", "time hashed vs from-scratch point location");
  bench_locate_cmd->add_option("--dim", dim, "dimension")->required();
  bench_locate_cmd->add_option("--n", n, "build size")->required();
  bench_locate_cmd->add_option("--dist", build_dist, "build distribution (queries draw from the cube)");
  bench_locate_cmd->add_option("--trials", trials, "number of queries (default 1000)");
  bench_locate_cmd->add_option("--seed", seed, "random seed");
  bench_locate_cmd->add_option("--budget-ms", budget_ms, "per-batch budget (0: unlimited)");
  bench_locate_cmd->add_option("--out", out_path, "CSV file (default stdout)");

  std::string in_path, query_path, algo = "auto";
  auto* hull_cmd = app.add_subcommand("hull", "hull vertices and volume of a pointset file");
  hull_cmd->add_option("file", in_path, "pointset file: 'n d' header, then n*d coordinates")
      ->required();
  hull_cmd->add_option("--algo", algo, "auto|hashed|laplace");
  hull_cmd->add_option("--threshold-dim", threshold_dim, "hashing threshold for auto");

  auto* locate_cmd = app.add_subcommand("locate", "build a hull, then locate query points");
  locate_cmd->add_option("build", in_path, "pointset file to triangulate")->required();
  locate_cmd->add_option("queries", query_path, "pointset file of query points")->required();
  locate_cmd->add_option("--algo", algo, "hashed|scratch");
  locate_cmd->add_option("--threshold-dim", threshold_dim, "hashing threshold");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen_points_cmd->parsed()) {
      OutFile out(out_path);
      AnyPointSet ps = gen_points(n, dim, parse_distribution(dist), parse_scenario(scenario), seed);
      std::visit([&](const auto& set) { write_pointset(out.stream(), set); }, ps);
      return 0;
    }
    if (gen_matrix_cmd->parsed()) {
      OutFile out(out_path);
      const Scenario sc = parse_scenario(scenario);
      const auto n_up = static_cast<std::size_t>(updates);
      if (scenario_is_integer(sc)) {
        emit_chain(out.stream(), gen_matrix_int(dim, sc, seed, n_up), sc);
      } else {
        emit_chain(out.stream(), gen_matrix_rat(dim, sc, seed, n_up), sc);
      }
      return 0;
    }
    if (bench_det_cmd->parsed()) {
      DetBenchConfig cfg;
      cfg.dims = dims;
      cfg.scenarios = to_scenarios(scenarios);
      cfg.algorithms =
          algos.empty() ? std::vector<std::string>{"laplace", "bird", "lu", "dynadj", "dyninv"}
                        : algos;
      cfg.seed = seed;
      cfg.trials_override = trials;
      cfg.budget_ms = budget_ms;
      OutFile out(out_path);
      write_csv(out.stream(), bench_determinants(cfg));
      return 0;
    }
    if (bench_hull_cmd->parsed()) {
      HullBenchConfig cfg;
      cfg.dims = dims;
      cfg.n_list = n_list;
      cfg.dist = parse_distribution(hull_dist);
      cfg.integer_input = scenario_is_integer(parse_scenario(scenario));
      cfg.variants = algos.empty() ? std::vector<std::string>{"hashed-z", "hashed-q", "laplace"}
                                   : algos;
      cfg.threshold_dim = threshold_dim;
      cfg.seed = seed;
      cfg.budget_ms = budget_ms;
      OutFile out(out_path);
      write_csv(out.stream(), bench_hull(cfg));
      return 0;
    }
    if (bench_locate_cmd->parsed()) {
      LocateBenchConfig cfg;
      cfg.d = dim;
      cfg.n = n;
      cfg.build_dist = parse_distribution(build_dist);
      cfg.q_count = trials ? static_cast<long>(trials) : 1000;
      cfg.seed = seed;
      cfg.budget_ms = budget_ms;
      OutFile out(out_path);
      write_csv(out.stream(), bench_locate(cfg));
      return 0;
    }
    if (hull_cmd->parsed()) {
      AnyPointSet ps = read_file(in_path);
      std::visit([&](const auto& set) { print_hull(set, to_mode(algo), threshold_dim); }, ps);
      return 0;
    }
    if (locate_cmd->parsed()) {
      if (algo == "auto") algo = "hashed";
      if (algo != "hashed" && algo != "scratch")
        throw InvalidScenario("unknown locate mode: " + algo + " (hashed|scratch)");
      const bool scratch = algo == "scratch";
      AnyPointSet build = read_file(in_path);
      AnyPointSet queries = read_file(query_path);
      if (build.index() == 0 && queries.index() == 0) {
        run_locate(std::get<PointSet<ExactInt>>(build), std::get<PointSet<ExactInt>>(queries),
                   scratch, threshold_dim);
      } else {
        // Mixed or rational inputs: compare on the common field.
        auto as_rat = [](const AnyPointSet& any) {
          return std::holds_alternative<PointSet<ExactRat>>(any)
                     ? std::get<PointSet<ExactRat>>(any)
                     : widen(std::get<PointSet<ExactInt>>(any));
        };
        run_locate(as_rat(build), as_rat(queries), scratch, threshold_dim);
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

// burnkit: command-line front end for the burning toolkit.
//
// Exit codes: 0 success, 1 verification failure (or a negative answer from
// `hist`), 2 input or usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "burnkit/bench.hpp"
#include "burnkit/burning.hpp"
#include "burnkit/generators.hpp"
#include "burnkit/hit_strategy.hpp"
#include "burnkit/io.hpp"
#include "burnkit/spanning.hpp"

namespace {

using namespace burnkit;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kInputError = 2;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("BURNKIT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::BadParams, "BURNKIT_SEED is not an unsigned integer");
    }
  }
  return 0;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
}

void print(const nlohmann::json& j) { std::cout << j.dump() << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph burning toolkit: exact burning numbers and certified schedules"};
  app.require_subcommand(1);

  int limit_exact = SolverOptions{}.max_order;
  int limit_hist = HistOptions{}.max_order;
  std::uint64_t limit_trees = SpanningOptions{}.max_trees;
  app.add_option("--limit-exact", limit_exact, "Largest order handed to the exact solver")
      ->capture_default_str();
  app.add_option("--limit-hist", limit_hist, "Largest order for the HIST search")->capture_default_str();
  app.add_option("--limit-trees", limit_trees, "Largest spanning-tree count to enumerate")
      ->capture_default_str();

  std::string graph_path;
  std::vector<Vertex> sources;
  std::vector<Vertex> preburn;

  auto* burn = app.add_subcommand("burn", "Simulate a schedule and print its burn map");
  burn->add_option("graph", graph_path, "Edge-list file")->required();
  burn->add_option("--sources", sources, "Comma-separated sources, one per round")
      ->delimiter(',')
      ->required();
  burn->add_option("--preburn", preburn, "Comma-separated vertices burned in round 1")->delimiter(',');

  auto* solve = app.add_subcommand("solve", "Exact (modified) burning number with a witness");
  solve->add_option("graph", graph_path, "Edge-list file")->required();
  solve->add_option("--preburn", preburn, "Comma-separated vertices burned in round 1")->delimiter(',');

  auto* hit_plan = app.add_subcommand("hit-plan", "Plan within ceil(sqrt(n)) rounds for a HIT");
  hit_plan->add_option("tree", graph_path, "Edge-list file")->required();

  auto* tree_plan = app.add_subcommand("tree-plan", "Plan within ceil(sqrt(n+d)) rounds for any tree");
  tree_plan->add_option("tree", graph_path, "Edge-list file")->required();

  auto* hist = app.add_subcommand("hist", "Find a spanning tree without degree-2 vertices");
  hist->add_option("graph", graph_path, "Edge-list file")->required();

  auto* spanning_min = app.add_subcommand("spanning-min", "Burning number as a minimum over spanning trees");
  spanning_min->add_option("graph", graph_path, "Edge-list file")->required();

  std::string family;
  GenParams gen_params;
  gen_params.seed = 0;
  bool seed_given = false;
  auto* gen = app.add_subcommand("gen", "Generate a graph and print it as an edge list");
  gen->add_option("family", family, "path|cycle|complete|star|spider|petersen|random_tree|random_hit")
      ->required();
  gen->add_option("--n", gen_params.n, "Number of vertices");
  auto* seed_opt = gen->add_option("--seed", gen_params.seed, "Seed (default: $BURNKIT_SEED or 0)");
  gen->add_option("--legs", gen_params.legs, "Comma-separated spider leg lengths")->delimiter(',');

  std::string plan_path;
  auto* verify = app.add_subcommand("verify", "Check that a schedule or plan burns a graph");
  verify->add_option("graph", graph_path, "Edge-list file")->required();
  verify->add_option("plan", plan_path, "Schedule or plan JSON")->required();

  std::string bench_path;
  auto* bench = app.add_subcommand("bench", "Compare tree bounds against exact values (CSV)");
  bench->add_option("spec", bench_path, "Bench spec JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  seed_given = seed_opt->count() > 0;

  SolverOptions solver{limit_exact};
  try {
    if (burn->parsed()) {
      Graph g = read_edge_list_file(graph_path);
      print(to_json(simulate_modified(g, ModifiedSchedule{preburn, sources})));
    } else if (solve->parsed()) {
      Graph g = read_edge_list_file(graph_path);
      auto r = modified_burning_number_exact(g, preburn, solver);
      nlohmann::json out = to_json(r.witness);
      out["k"] = r.k;
      print(out);
    } else if (hit_plan->parsed()) {
      print(to_json(hit_schedule(Tree(read_edge_list_file(graph_path)))));
    } else if (tree_plan->parsed()) {
      print(to_json(tree_schedule_via_augmentation(Tree(read_edge_list_file(graph_path)))));
    } else if (hist->parsed()) {
      HistResult r = find_hist(read_edge_list_file(graph_path), HistOptions{limit_hist});
      if (!r.found) {
        std::cerr << "no homeomorphically irreducible spanning tree (" << r.nodes << " nodes searched)\n";
        return kVerificationFailed;
      }
      write_edge_list(std::cout, r.tree->graph());
    } else if (spanning_min->parsed()) {
      Graph g = read_edge_list_file(graph_path);
      auto r = burning_number_via_spanning_trees(g, SpanningOptions{limit_trees}, solver);
      nlohmann::json out = to_json(r.schedule);
      out["k"] = r.k;
      out["tree_edges"] = r.tree.edges();
      out["tree_index"] = r.tree_index;
      out["trees_examined"] = r.trees_examined;
      print(out);
    } else if (gen->parsed()) {
      if (!seed_given) gen_params.seed = default_seed();
      write_edge_list(std::cout, generate(family, gen_params));
    } else if (verify->parsed()) {
      Graph g = read_edge_list_file(graph_path);
      nlohmann::json plan = read_json_file(plan_path);
      ModifiedSchedule m = schedule_from_json(plan);
      BurnMap bm = simulate_modified(g, m);
      print(to_json(bm));
      if (!bm.complete()) {
        std::cerr << "verification failed: some vertices are unburned after " << m.length() << " rounds\n";
        return kVerificationFailed;
      }
      if (plan.contains("bound") && m.length() > plan.at("bound").get<int>()) {
        std::cerr << "verification failed: " << m.length() << " sources exceed bound "
                  << plan.at("bound").get<int>() << '\n';
        return kVerificationFailed;
      }
    } else if (bench->parsed()) {
      BenchReport report = run_bench(bench_spec_from_json(read_json_file(bench_path)));
      write_bench_csv(std::cout, report.records);
      std::cout << '\n';
      write_bench_summary(std::cout, report.buckets);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.is_internal() ? kVerificationFailed : kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}

#include <random>

#include "doctest.h"

#include "burnkit/burning.hpp"
#include "burnkit/generators.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace burnkit;

TEST_CASE("simulate") {
  BurnMap p4 = simulate(path_graph(4), BurningSchedule{{1, 3}});
  CHECK(p4.rounds == std::vector<int>{2, 1, 2, 2});
  CHECK(p4.completion == 2);
  CHECK(is_complete(p4));

  BurnMap k1 = simulate(path_graph(1), BurningSchedule{{0}});
  CHECK(k1.rounds == std::vector<int>{1});
  CHECK(k1.completion == 1);

  // One source suffices for the Petersen graph; the rest are repeats.
  BurnMap pet = simulate(petersen_graph(), BurningSchedule{{0, 0, 0}});
  CHECK(pet.complete());
  CHECK(pet.completion == 3);

  BurnMap short_run = simulate(path_graph(4), BurningSchedule{{0}});
  CHECK_FALSE(is_complete(short_run));
  CHECK(short_run.rounds == std::vector<int>{1, kUnburned, kUnburned, kUnburned});
  CHECK(short_run.completion == kUnburned);

  CHECK_THROWS_AS(simulate(path_graph(3), BurningSchedule{{3}}), Error);
  CHECK_THROWS_AS(simulate(path_graph(3), BurningSchedule{}), Error);
}

TEST_CASE("simulate_modified") {
  // One source means one round, so vertex 2 is still waiting.
  BurnMap one = simulate_modified(path_graph(3), ModifiedSchedule{{1}, {0}});
  CHECK(one.rounds == std::vector<int>{1, 1, kUnburned});
  CHECK_FALSE(one.complete());
  BurnMap bm = simulate_modified(path_graph(3), ModifiedSchedule{{1}, {0, 0}});
  CHECK(bm.rounds == std::vector<int>{1, 1, 2});
  CHECK(bm.completion == 2);

  Graph pet = petersen_graph();
  BurningSchedule s{{4, 7, 2}};
  CHECK(simulate_modified(pet, ModifiedSchedule{{}, s.sources}) == simulate(pet, s));

  // Component {1,2,3} of the figure's HIT with its middle vertex preburned.
  BurnMap piece = simulate_modified(path_graph(3), ModifiedSchedule{{1}, {0, 0}});
  CHECK(piece.complete());
  CHECK(piece.completion <= 2);

  CHECK_THROWS_AS(simulate_modified(path_graph(3), ModifiedSchedule{{5}, {0}}), Error);
}

TEST_CASE("simulation matches the closed form") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 1 + static_cast<int>(rng() % 14);
    Graph g = random_connected_graph(n, 0.2, rng());
    auto dist = oracle::floyd_warshall(g);
    int k = 1 + static_cast<int>(rng() % 6);
    std::vector<Vertex> sources(k);
    for (auto& s : sources) s = static_cast<Vertex>(rng() % n);
    std::vector<Vertex> preburn;
    if (trial % 2) {
      int u = static_cast<int>(rng() % 3);
      for (int i = 0; i < u; ++i) preburn.push_back(static_cast<Vertex>(rng() % n));
    }
    BurnMap bm = simulate_modified(g, ModifiedSchedule{preburn, sources});
    CHECK(bm.rounds == oracle::closed_form_rounds(dist, preburn, sources));
  }
}

TEST_CASE("appending a source never delays any vertex") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 12);
    Graph g = random_connected_graph(n, 0.1, rng());
    std::vector<Vertex> sources(1 + rng() % 4);
    for (auto& s : sources) s = static_cast<Vertex>(rng() % n);
    BurnMap before = simulate(g, BurningSchedule{sources});
    sources.push_back(static_cast<Vertex>(rng() % n));
    BurnMap after = simulate(g, BurningSchedule{sources});
    for (Vertex v = 0; v < n; ++v) {
      if (before.rounds[v] != kUnburned) CHECK(after.rounds[v] == before.rounds[v]);
    }
  }
}

TEST_CASE("burning_number_exact on the figure graphs") {
  auto p4 = burning_number_exact(path_graph(4));
  CHECK(p4.k == 2);
  CHECK(simulate(path_graph(4), p4.witness).completion == 2);

  auto pet = burning_number_exact(petersen_graph());
  CHECK(pet.k == 3);
  CHECK(simulate(petersen_graph(), pet.witness).complete());

  CHECK(burning_number_exact(fixtures::fig1_hit().graph()).k == 3);
  CHECK(burning_number_exact(path_graph(9)).k == 3);
  CHECK(burning_number_exact(path_graph(1)).k == 1);
}

TEST_CASE("burning_number_exact errors") {
  std::vector<Edge> two{{0, 1}, {2, 3}};
  CHECK_THROWS_AS(burning_number_exact(Graph(4, two)), Error);
  try {
    burning_number_exact(path_graph(40), SolverOptions{30});
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
  CHECK(burning_number_exact(path_graph(40)).k == 7);
}

TEST_CASE("paths burn in ceil(sqrt(n)) rounds") {
  for (int n = 1; n <= 30; ++n) CHECK(burning_number_exact(path_graph(n)).k == ceil_sqrt(n));
}

TEST_CASE("exact solver agrees with naive enumeration, witness included") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : oracle::all_connected_graphs(n)) {
      auto fast = burning_number_exact(g);
      auto slow = oracle::naive_burning_number(g);
      CHECK(fast.k == slow.k);
      CHECK(fast.witness.sources == slow.witness);
    }
  }
}

TEST_CASE("modified_burning_number_exact") {
  std::vector<Vertex> middle{1};
  auto p3 = modified_burning_number_exact(path_graph(3), middle);
  CHECK(p3.k == 2);
  CHECK(oracle::naive_burning_number(path_graph(3), middle).k == 2);

  // x_1 may be any vertex, so K2 with one end preburned finishes in round 1.
  std::vector<Vertex> end{0};
  std::vector<Edge> k2_edges{{0, 1}};
  Graph k2(2, k2_edges);
  auto k2r = modified_burning_number_exact(k2, end);
  CHECK(k2r.k == 1);
  CHECK(k2r.witness.sources == std::vector<Vertex>{1});
  CHECK(oracle::naive_burning_number(k2, end).k == 1);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = random_connected_graph(6 + static_cast<int>(seed % 5), 0.1, seed);
    CHECK(modified_burning_number_exact(g, {}).k == burning_number_exact(g).k);
  }

  // Preburning everything still needs one round.
  std::vector<Vertex> all{0, 1, 2, 3};
  auto covered = modified_burning_number_exact(path_graph(4), all);
  CHECK(covered.k == 1);
  CHECK(covered.witness.length() == 1);
}

TEST_CASE("modified exact solver agrees with naive enumeration") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    Graph g = random_connected_graph(n, 0.2, rng());
    std::vector<Vertex> preburn{static_cast<Vertex>(rng() % n)};
    if (trial % 3 == 0) preburn.push_back(static_cast<Vertex>(rng() % n));
    auto fast = modified_burning_number_exact(g, preburn);
    auto slow = oracle::naive_burning_number(g, preburn);
    CHECK(fast.k == slow.k);
    CHECK(fast.witness.sources == slow.witness);
  }
}

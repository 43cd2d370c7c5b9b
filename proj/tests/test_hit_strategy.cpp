#include <random>

#include "doctest.h"

#include "burnkit/burning.hpp"
#include "burnkit/generators.hpp"
#include "burnkit/hit_strategy.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace burnkit;

namespace {

// Both size conditions, recomputed from scratch with bridge_component.
void check_anchor(const Tree& t, const Anchor& a) {
  int tau = 2 * ceil_sqrt(t.order()) - 1;
  CHECK(a.threshold == tau);
  CHECK(a.neighbors.back() == a.heavy);
  CHECK(static_cast<int>(a.neighbors.size()) == t.degree(a.x));
  CHECK(bridge_component(t, a.x, a.heavy).size() >= tau);
  CHECK(bridge_component(t, a.x, a.heavy).size() == a.heavy_side_size);
  for (std::size_t i = 0; i + 1 < a.neighbors.size(); ++i) {
    int light = bridge_component(t, a.neighbors[i], a.x).size();
    CHECK(light < tau);
    CHECK(light == a.light_side_sizes[i]);
  }
  CHECK(a.steps <= t.order());
}

}  // namespace

TEST_CASE("find_anchor examples") {
  Tree star = fixtures::star_tree(6);
  Anchor s = find_anchor(star);
  CHECK(s.threshold == 5);
  CHECK(s.x == 0);
  CHECK(s.heavy == 1);
  CHECK(s.heavy_side_size == 5);
  CHECK(s.light_side_sizes == std::vector<int>{1, 1, 1, 1});
  check_anchor(star, s);

  Tree hit = fixtures::fig1_hit();
  Anchor h = find_anchor(hit);
  CHECK(h.threshold == 5);
  CHECK(h.x == 3);
  CHECK(h.heavy == 1);
  CHECK(h.neighbors == std::vector<Vertex>{4, 5, 1});
  CHECK(h.light_side_sizes == std::vector<int>{1, 3});
  CHECK(h.steps == 2);
  check_anchor(hit, h);

  // Spider with legs 1, 1, 3: hub 0, legs {1}, {2}, {3,4,5}.
  Tree spider(spider_graph({1, 1, 3}));
  Anchor sp = find_anchor(spider);
  CHECK(sp.x == 0);
  CHECK(sp.heavy == 1);
  check_anchor(spider, sp);

  Tree p6 = fixtures::path_tree(6);
  CHECK_FALSE(is_hit(p6));
  check_anchor(p6, find_anchor(p6));

  try {
    find_anchor(fixtures::star_tree(5));
    FAIL("expected TooSmall");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooSmall);
  }
}

TEST_CASE("find_anchor is sound on random trees") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Tree t = random_tree(6 + static_cast<int>(seed % 120), seed);
    check_anchor(t, find_anchor(t));
  }
}

TEST_CASE("lift_schedule") {
  Tree p3 = fixtures::path_tree(3);
  ModifiedSchedule m = lift_schedule(p3, 1, BurningSchedule{{0, 0}});
  CHECK(m.preburn == std::vector<Vertex>{1});
  CHECK(m.sources == std::vector<Vertex>{0, 0});
  BurnMap bm = simulate_modified(p3.graph(), m);
  CHECK(bm.rounds == std::vector<int>{1, 1, 2});

  // Smoothed K2 is {0, 2}; (0, 2) in its ids is (0, 1).
  ModifiedSchedule m2 = lift_schedule(p3, 1, BurningSchedule{{0, 1}});
  CHECK(m2.sources == std::vector<Vertex>{0, 2});
  CHECK(simulate_modified(p3.graph(), m2).complete());

  CHECK_THROWS_AS(lift_schedule(p3, 0, BurningSchedule{{0}}), Error);
  try {
    lift_schedule(fixtures::path_tree(5), 2, BurningSchedule{{0}});
    FAIL("expected BaseScheduleIncomplete");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BaseScheduleIncomplete);
  }
}

TEST_CASE("lifted schedules stay complete with the same length") {
  std::mt19937_64 rng(11);
  int lifted = 0;
  for (int trial = 0; trial < 400 && lifted < 150; ++trial) {
    Tree t = random_tree(3 + static_cast<int>(rng() % 15), rng());
    std::vector<Vertex> twos;
    for (Vertex v = 0; v < t.order(); ++v)
      if (t.degree(v) == 2) twos.push_back(v);
    if (twos.empty()) continue;
    Vertex v = twos[rng() % twos.size()];
    Smoothing sm = smooth(t, v);
    int k = burning_number_exact(sm.tree.graph()).k + static_cast<int>(rng() % 2);
    BurningSchedule s;
    for (int attempt = 0; attempt < 200; ++attempt) {
      s.sources.assign(k, 0);
      for (auto& x : s.sources) x = static_cast<Vertex>(rng() % sm.tree.order());
      if (simulate(sm.tree.graph(), s).complete()) break;
      s.sources.clear();
    }
    if (s.sources.empty()) continue;
    ModifiedSchedule m = lift_schedule(t, v, s);
    CHECK(m.length() == s.length());
    CHECK(simulate_modified(t.graph(), m).complete());
    ++lifted;
  }
  CHECK(lifted >= 100);
}

TEST_CASE("hit_schedule examples") {
  CertifiedPlan star = hit_schedule(fixtures::star_tree(5));
  CHECK(star.schedule.sources == std::vector<Vertex>{0, 1});
  CHECK(star.bound == 3);
  CHECK(star.verification.complete());

  CertifiedPlan star4 = hit_schedule(fixtures::star_tree(4));
  CHECK(star4.schedule.length() == 2);

  std::vector<Edge> k2{{0, 1}};
  CertifiedPlan edge = hit_schedule(Tree(2, k2));
  CHECK(edge.schedule.sources == std::vector<Vertex>{0, 1});
  CHECK(edge.bound == 2);

  CertifiedPlan single = hit_schedule(Tree(1, std::vector<Edge>{}));
  CHECK(single.schedule.sources == std::vector<Vertex>{0});

  CertifiedPlan fig = hit_schedule(fixtures::fig1_hit());
  CHECK(fig.bound == 3);
  CHECK(fig.schedule.length() == 3);
  CHECK(fig.schedule.sources[0] == 3);
  CHECK(fig.schedule.sources[1] == 0);
  CHECK(fig.verification.completion <= 3);

  try {
    hit_schedule(fixtures::path_tree(3));
    FAIL("expected NotAHIT");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAHIT);
  }
}

TEST_CASE("hit_schedule over every HIT up to 12 vertices") {
  for (int n = 1; n <= 12; ++n) {
    for (const Tree& t : enumerate_hits(n)) {
      CertifiedPlan plan = hit_schedule(t);
      CHECK(plan.schedule.length() <= ceil_sqrt(n));
      CHECK(simulate(t.graph(), plan.schedule).complete());
      CHECK(burning_number_exact(t.graph()).k <= plan.schedule.length());
    }
  }
}

TEST_CASE("anchor side of a HIT lies within ceil(sqrt(n)) - 1 of the anchor") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    int n = 6 + static_cast<int>(seed % 195);
    if (n == 3) continue;
    Tree t = random_hit(n, seed);
    Anchor a = find_anchor(t);
    auto dist = oracle::floyd_warshall(t.graph());
    for (Vertex v : bridge_component(t, a.x, a.heavy).vertices) CHECK(dist[a.x][v] <= ceil_sqrt(n) - 1);
    int heavy_side = bridge_component(t, a.heavy, a.x).size();
    int b = ceil_sqrt(n);
    CHECK(heavy_side <= n - 2 * b + 1);
    CHECK(n - 2 * b + 1 <= (b - 1) * (b - 1));
  }
}

TEST_CASE("augment_degree2") {
  Augmentation p3 = augment_degree2(fixtures::path_tree(3));
  CHECK(p3.tree.order() == 4);
  CHECK(p3.hosts == std::vector<Vertex>{1});
  CHECK(p3.tree.degree(1) == 3);
  CHECK(is_hit(p3.tree));

  Tree hit = fixtures::fig1_hit();
  Augmentation same = augment_degree2(hit);
  CHECK(same.tree == hit);
  CHECK(same.hosts.empty());

  Augmentation p5 = augment_degree2(fixtures::path_tree(5));
  CHECK(p5.tree.order() == 8);
  CHECK(p5.hosts == std::vector<Vertex>{1, 2, 3});
  CHECK(is_hit(p5.tree));
}

TEST_CASE("tree_schedule_via_augmentation") {
  CertifiedPlan p3 = tree_schedule_via_augmentation(fixtures::path_tree(3));
  CHECK(p3.bound == 2);
  CHECK(p3.schedule.length() <= 2);
  CHECK(p3.verification.complete());
  CHECK(burning_number_exact(path_graph(3)).k == 2);

  CertifiedPlan p9 = tree_schedule_via_augmentation(fixtures::path_tree(9));
  CHECK(p9.bound == 4);
  CHECK(p9.schedule.length() <= 4);
  CHECK(simulate(path_graph(9), p9.schedule).complete());

  Tree hit = fixtures::fig1_hit();
  CertifiedPlan direct = hit_schedule(hit);
  CertifiedPlan via = tree_schedule_via_augmentation(hit);
  CHECK(via.schedule == direct.schedule);
  CHECK(via.bound == direct.bound);
}

TEST_CASE("augmentation plans verify on random trees") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Tree t = random_tree(1 + static_cast<int>(seed % 100), seed);
    CertifiedPlan plan = tree_schedule_via_augmentation(t);
    int d = oracle::count_degree(t, 2);
    CHECK(plan.bound == ceil_sqrt(t.order() + d));
    CHECK(plan.schedule.length() <= plan.bound);
    CHECK(simulate(t.graph(), plan.schedule).complete());
  }
}

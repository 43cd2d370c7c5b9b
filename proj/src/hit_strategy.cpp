#include "burnkit/hit_strategy.hpp"

#include <algorithm>
#include <string>

namespace burnkit {
namespace {

[[noreturn]] void plan_bug(const std::string& what) {
  throw Error(ErrorKind::PlanVerificationFailed, what);
}

CertifiedPlan certify(const Graph& g, BurningSchedule schedule, int bound, ErrorKind on_failure) {
  BurnMap bm = simulate(g, schedule);
  if (!bm.complete() || schedule.length() > bound) {
    throw Error(on_failure, "schedule of length " + std::to_string(schedule.length()) +
                                (bm.complete() ? " exceeds bound " : " leaves vertices unburned; bound ") +
                                std::to_string(bound));
  }
  return CertifiedPlan{std::move(schedule), bound, std::move(bm)};
}

// Modified schedule for the y-side of the anchor, y preburned, in the ids of
// `side`. Length at most ceil(sqrt(n)) - 1 of the parent tree.
ModifiedSchedule schedule_heavy_side(const Tree& side, Vertex y) {
  if (side.order() == 1) return ModifiedSchedule{{y}, {y}};
  if (side.degree(y) == 2) {
    Smoothing sm = smooth(side, y);
    CertifiedPlan inner = hit_schedule(sm.tree);
    return lift_schedule(side, y, inner.schedule);
  }
  CertifiedPlan inner = hit_schedule(side);
  return ModifiedSchedule{{y}, std::move(inner.schedule.sources)};
}

BurningSchedule schedule_base_case(const Tree& t) {
  switch (t.order()) {
    case 1: return BurningSchedule{{0}};
    case 2: return BurningSchedule{{0, 1}};
    default:
      // n = 4 or 5: the only HITs are stars.
      return BurningSchedule{{t.internal_vertices().front(), t.leaves().front()}};
  }
}

BurningSchedule schedule_recursive(const Tree& t) {
  int n = t.order();
  if (n <= 5) return schedule_base_case(t);

  int bound = ceil_sqrt(n);
  Anchor anchor = find_anchor(t);
  Vertex x = anchor.x;
  Vertex y = anchor.heavy;

  BridgeSide light = bridge_component(t, x, y);
  BridgeSide heavy = bridge_component(t, y, x);
  if (heavy.size() > n - 2 * bound + 1 || n - 2 * bound + 1 > (bound - 1) * (bound - 1)) {
    plan_bug("heavy side of size " + std::to_string(heavy.size()) + " breaks the recursion measure");
  }

  auto dist = bfs_distances(t.graph(), x);
  int eccentricity = 0;
  for (Vertex v : light.vertices) eccentricity = std::max(eccentricity, dist[v]);
  if (eccentricity > bound - 1) {
    plan_bug("anchor " + std::to_string(x) + " has eccentricity " + std::to_string(eccentricity));
  }

  Subtree sub = induced_subtree(t, heavy.vertices);
  auto local_y = static_cast<Vertex>(
      std::lower_bound(sub.original.begin(), sub.original.end(), y) - sub.original.begin());
  ModifiedSchedule rest = schedule_heavy_side(sub.tree, local_y);

  BurningSchedule s;
  s.sources.push_back(x);
  for (Vertex v : rest.sources) s.sources.push_back(sub.original[v]);
  while (s.length() < eccentricity + 1) s.sources.push_back(x);
  return s;
}

}  // namespace

Anchor find_anchor(const Tree& t) {
  int n = t.order();
  if (n < 6) throw Error(ErrorKind::TooSmall, "anchor needs at least 6 vertices, got " + std::to_string(n));

  Anchor a;
  a.threshold = 2 * ceil_sqrt(n) - 1;
  RootedTree rooted = root_tree(t, 0);

  Vertex prev = t.leaves().front();
  Vertex x = t.neighbors(prev).front();
  a.steps = 1;
  for (;;) {
    Vertex next = kNoVertex;
    for (Vertex v : t.neighbors(x)) {
      if (v != prev && rooted.side_size(v, x) >= a.threshold) {
        next = v;
        break;
      }
    }
    if (next == kNoVertex) break;
    prev = x;
    x = next;
    if (++a.steps > n) plan_bug("anchor walk did not terminate");
  }

  a.x = x;
  a.heavy = prev;
  for (Vertex v : t.neighbors(x)) {
    if (v == prev) continue;
    a.neighbors.push_back(v);
    a.light_side_sizes.push_back(rooted.side_size(v, x));
  }
  a.neighbors.push_back(prev);
  a.heavy_side_size = rooted.side_size(x, prev);
  return a;
}

ModifiedSchedule lift_schedule(const Tree& t, Vertex v, const BurningSchedule& s) {
  Smoothing sm = smooth(t, v);
  if (!simulate(sm.tree.graph(), s).complete()) {
    throw Error(ErrorKind::BaseScheduleIncomplete, "schedule does not burn the smoothed tree");
  }
  ModifiedSchedule m;
  m.preburn = {v};
  m.sources.reserve(s.sources.size());
  for (Vertex u : s.sources) m.sources.push_back(sm.new_to_old[u]);
  if (!simulate_modified(t.graph(), m).complete()) {
    throw Error(ErrorKind::LiftVerificationFailed, "lifted schedule leaves vertices unburned");
  }
  return m;
}

CertifiedPlan hit_schedule(const Tree& t) {
  if (!is_hit(t)) throw Error(ErrorKind::NotAHIT, "tree has a degree-2 vertex");
  return certify(t.graph(), schedule_recursive(t), ceil_sqrt(t.order()),
                 ErrorKind::PlanVerificationFailed);
}

Augmentation augment_degree2(const Tree& t) {
  int n = t.order();
  Augmentation aug;
  std::vector<Edge> edges = t.edges();
  for (Vertex v = 0; v < n; ++v) {
    if (t.degree(v) != 2) continue;
    edges.emplace_back(v, n + static_cast<Vertex>(aug.hosts.size()));
    aug.hosts.push_back(v);
  }
  aug.tree = Tree(n + static_cast<int>(aug.hosts.size()), edges);
  return aug;
}

CertifiedPlan tree_schedule_via_augmentation(const Tree& t) {
  int n = t.order();
  Augmentation aug = augment_degree2(t);
  CertifiedPlan plan = hit_schedule(aug.tree);
  BurningSchedule projected;
  projected.sources.reserve(plan.schedule.sources.size());
  for (Vertex v : plan.schedule.sources) projected.sources.push_back(v < n ? v : aug.hosts[v - n]);
  return certify(t.graph(), std::move(projected), ceil_sqrt(aug.tree.order()),
                 ErrorKind::ProjectionVerificationFailed);
}

}  // namespace burnkit

#include "burnkit/burning.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace burnkit {
namespace {

void check_sources(const Graph& g, std::span<const Vertex> ids) {
  for (Vertex v : ids) {
    if (!g.valid(v)) throw Error(ErrorKind::InvalidSource, "vertex " + std::to_string(v));
  }
}

BurnMap run(const Graph& g, std::span<const Vertex> preburn, std::span<const Vertex> sources) {
  if (sources.empty()) throw Error(ErrorKind::BadParams, "schedule has no sources");
  check_sources(g, preburn);
  check_sources(g, sources);

  int n = g.order();
  BurnMap bm;
  bm.rounds.assign(n, kUnburned);
  std::vector<Vertex> frontier;
  for (Vertex u : preburn) {
    if (bm.rounds[u] == kUnburned) {
      bm.rounds[u] = 1;
      frontier.push_back(u);
    }
  }
  int k = static_cast<int>(sources.size());
  std::vector<Vertex> next;
  for (int round = 1; round <= k; ++round) {
    next.clear();
    if (round > 1) {
      for (Vertex u : frontier)
        for (Vertex w : g.neighbors(u))
          if (bm.rounds[w] == kUnburned) {
            bm.rounds[w] = round;
            next.push_back(w);
          }
    }
    Vertex x = sources[round - 1];
    if (bm.rounds[x] == kUnburned) {
      bm.rounds[x] = round;
      next.push_back(x);
    }
    if (round == 1) next.insert(next.end(), frontier.begin(), frontier.end());
    frontier.swap(next);
  }

  bool all = std::none_of(bm.rounds.begin(), bm.rounds.end(), [](int r) { return r == kUnburned; });
  if (all && n > 0) bm.completion = *std::max_element(bm.rounds.begin(), bm.rounds.end());
  return bm;
}

// Fixed-width bitset over the vertex set, sized at runtime.
class VertexSet {
 public:
  explicit VertexSet(int n = 0) : words_((n + 63) / 64, 0) {}

  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  int count_and_not(const VertexSet& covered) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & ~covered.words_[i]);
    return c;
  }
  void unite(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Balls B(v, r) for every v and every r below a radius cap.
class BallTable {
 public:
  BallTable(const Graph& g, int max_radius) : n_(g.order()) {
    auto dist = all_pairs_distances(g);
    balls_.resize(static_cast<std::size_t>(max_radius + 1));
    for (int r = 0; r <= max_radius; ++r) {
      balls_[r].assign(n_, VertexSet(n_));
      for (Vertex v = 0; v < n_; ++v)
        for (Vertex u = 0; u < n_; ++u)
          if (dist[v][u] >= 0 && dist[v][u] <= r) balls_[r][v].set(u);
    }
  }

  const VertexSet& ball(Vertex v, int r) const { return balls_[r][v]; }

 private:
  int n_;
  std::vector<std::vector<VertexSet>> balls_;
};

// Depth-first placement of x_1..x_k, lexicographic in the schedule. Source i covers
// the ball of radius k-i around it; the schedule completes iff the balls
// (plus radius k-1 balls around the preburned set) cover every vertex.
class CoverSearch {
 public:
  CoverSearch(const Graph& g, const BallTable& balls, int k, SolverStats* stats)
      : balls_(balls), k_(k), n_(g.order()), stats_(stats) {}

  std::optional<std::vector<Vertex>> run(const VertexSet& initial) {
    chosen_.assign(k_, 0);
    if (dfs(0, initial)) return chosen_;
    return std::nullopt;
  }

 private:
  int radius(int index) const { return k_ - 1 - index; }

  bool dfs(int index, const VertexSet& covered) {
    if (stats_) ++stats_->nodes;
    int uncovered = n_ - covered.count();
    if (uncovered == 0) {
      std::fill(chosen_.begin() + index, chosen_.end(), 0);
      return true;
    }
    if (index == k_) return false;

    // The remaining sources can add at most their best new coverage each.
    int capacity = 0;
    for (int j = index; j < k_ && capacity < uncovered; ++j) {
      int best = 0;
      for (Vertex v = 0; v < n_; ++v) best = std::max(best, balls_.ball(v, radius(j)).count_and_not(covered));
      capacity += best;
    }
    if (capacity < uncovered) return false;

    for (Vertex v = 0; v < n_; ++v) {
      VertexSet next = covered;
      next.unite(balls_.ball(v, radius(index)));
      chosen_[index] = v;
      if (dfs(index + 1, next)) return true;
    }
    return false;
  }

  const BallTable& balls_;
  int k_;
  int n_;
  SolverStats* stats_;
  std::vector<Vertex> chosen_;
};

void check_solvable(const Graph& g, const SolverOptions& opts) {
  if (g.order() == 0) throw Error(ErrorKind::BadParams, "empty graph");
  if (g.order() > opts.max_order) {
    throw Error(ErrorKind::TooLarge, std::to_string(g.order()) + " vertices exceeds exact limit " +
                                         std::to_string(opts.max_order));
  }
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "graph is not connected");
}

}  // namespace

BurnMap simulate(const Graph& g, const BurningSchedule& s) { return run(g, {}, s.sources); }

BurnMap simulate_modified(const Graph& g, const ModifiedSchedule& m) {
  return run(g, m.preburn, m.sources);
}

bool is_complete(const BurnMap& bm) { return bm.complete(); }

std::optional<ModifiedSchedule> find_schedule_of_length(const Graph& g,
                                                        std::span<const Vertex> preburn, int k,
                                                        SolverStats* stats) {
  if (k < 1) return std::nullopt;
  check_sources(g, preburn);
  BallTable balls(g, k - 1);
  VertexSet initial(g.order());
  for (Vertex u : preburn) initial.unite(balls.ball(u, k - 1));
  CoverSearch search(g, balls, k, stats);
  auto found = search.run(initial);
  if (!found) return std::nullopt;
  ModifiedSchedule m;
  m.preburn.assign(preburn.begin(), preburn.end());
  std::sort(m.preburn.begin(), m.preburn.end());
  m.preburn.erase(std::unique(m.preburn.begin(), m.preburn.end()), m.preburn.end());
  m.sources = std::move(*found);
  return m;
}

ModifiedExactResult modified_burning_number_exact(const Graph& g, std::span<const Vertex> preburn,
                                                  const SolverOptions& opts) {
  check_solvable(g, opts);
  check_sources(g, preburn);
  ModifiedExactResult result;
  // A connected graph on n vertices always burns within n rounds.
  for (int k = 1; k <= g.order(); ++k) {
    if (auto m = find_schedule_of_length(g, preburn, k, &result.stats)) {
      result.k = k;
      result.witness = std::move(*m);
      return result;
    }
  }
  throw Error(ErrorKind::Disconnected, "no schedule found within n rounds");
}

ExactResult burning_number_exact(const Graph& g, const SolverOptions& opts) {
  auto r = modified_burning_number_exact(g, {}, opts);
  return ExactResult{r.k, BurningSchedule{std::move(r.witness.sources)}, r.stats};
}

}  // namespace burnkit

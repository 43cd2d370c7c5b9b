#include "burnkit/spanning.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <numeric>

namespace burnkit {
namespace {

using BigInt = boost::multiprecision::cpp_int;

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

BigInt count_spanning_trees(const Graph& g) {
  int n = g.order();
  if (n <= 1) return n;
  // Laplacian with row and column 0 removed, then fraction-free elimination.
  int dim = n - 1;
  std::vector<std::vector<BigInt>> a(dim, std::vector<BigInt>(dim, 0));
  for (Vertex u = 1; u < n; ++u) {
    a[u - 1][u - 1] = g.degree(u);
    for (Vertex w : g.neighbors(u))
      if (w > 0) a[u - 1][w - 1] = -1;
  }
  BigInt prev_pivot = 1;
  int sign = 1;
  for (int k = 0; k < dim; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < dim; ++r)
        if (a[r][k] != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < dim; ++i) {
      for (int j = k + 1; j < dim; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev_pivot;
      }
      a[i][k] = 0;
    }
    prev_pivot = a[k][k];
  }
  return sign * a[dim - 1][dim - 1];
}

void require_connected(const Graph& g) {
  if (g.order() == 0) throw Error(ErrorKind::BadParams, "empty graph");
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "graph is not connected");
}

// True when the chosen edges plus the edges at positions >= from still
// connect every vertex.
bool still_connected(int n, const std::vector<Edge>& edges, const std::vector<bool>& chosen,
                     std::size_t from) {
  DisjointSets ds(n);
  int components = n;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if ((i < from && !chosen[i])) continue;
    if (ds.unite(edges[i].first, edges[i].second)) --components;
  }
  return components == 1;
}

class SpanningTreeWalker {
 public:
  SpanningTreeWalker(const Graph& g, const std::function<bool(const Tree&)>& visit)
      : n_(g.order()), edges_(g.edges()), chosen_(edges_.size(), false), visit_(visit) {}

  void run() { recurse(0, DisjointSets(n_), 0); }

 private:
  bool recurse(std::size_t index, DisjointSets ds, int picked) {
    if (picked == n_ - 1) {
      std::vector<Edge> tree_edges;
      for (std::size_t i = 0; i < index; ++i)
        if (chosen_[i]) tree_edges.push_back(edges_[i]);
      return visit_(Tree(n_, tree_edges));
    }
    if (index == edges_.size()) return true;

    auto [u, v] = edges_[index];
    DisjointSets with = ds;
    if (with.unite(u, v)) {
      chosen_[index] = true;
      if (!recurse(index + 1, std::move(with), picked + 1)) return false;
      chosen_[index] = false;
    }
    if (still_connected(n_, edges_, chosen_, index + 1)) {
      if (!recurse(index + 1, std::move(ds), picked)) return false;
    }
    return true;
  }

  int n_;
  std::vector<Edge> edges_;
  std::vector<bool> chosen_;
  const std::function<bool(const Tree&)>& visit_;
};

class HistSearch {
 public:
  explicit HistSearch(const Graph& g)
      : n_(g.order()), edges_(g.edges()), chosen_(edges_.size(), false), degree_(n_, 0),
        undecided_(n_, 0) {
    for (auto [u, v] : edges_) {
      ++undecided_[u];
      ++undecided_[v];
    }
  }

  std::optional<Tree> run() {
    if (n_ == 1) return Tree(1, std::vector<Edge>{});
    if (recurse(0, DisjointSets(n_), 0)) return found_;
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool frozen_at_two(Vertex v) const { return degree_[v] == 2 && undecided_[v] == 0; }

  bool recurse(std::size_t index, DisjointSets ds, int picked) {
    ++nodes_;
    if (picked == n_ - 1) {
      for (Vertex v = 0; v < n_; ++v)
        if (degree_[v] == 2) return false;
      std::vector<Edge> tree_edges;
      for (std::size_t i = 0; i < index; ++i)
        if (chosen_[i]) tree_edges.push_back(edges_[i]);
      found_ = Tree(n_, tree_edges);
      return true;
    }
    if (index == edges_.size()) return false;

    auto [u, v] = edges_[index];
    --undecided_[u];
    --undecided_[v];
    bool success = false;

    DisjointSets with = ds;
    if (with.unite(u, v)) {
      chosen_[index] = true;
      ++degree_[u];
      ++degree_[v];
      if (!frozen_at_two(u) && !frozen_at_two(v)) success = recurse(index + 1, std::move(with), picked + 1);
      --degree_[u];
      --degree_[v];
      chosen_[index] = false;
    }
    if (!success && !frozen_at_two(u) && !frozen_at_two(v) &&
        still_connected(n_, edges_, chosen_, index + 1)) {
      success = recurse(index + 1, std::move(ds), picked);
    }

    ++undecided_[u];
    ++undecided_[v];
    return success;
  }

  int n_;
  std::vector<Edge> edges_;
  std::vector<bool> chosen_;
  std::vector<int> degree_;
  std::vector<int> undecided_;
  std::optional<Tree> found_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::string spanning_tree_count(const Graph& g) { return count_spanning_trees(g).str(); }

void for_each_spanning_tree(const Graph& g, const std::function<bool(const Tree&)>& visit,
                            const SpanningOptions& opts) {
  require_connected(g);
  BigInt count = count_spanning_trees(g);
  if (count > opts.max_trees) {
    throw Error(ErrorKind::TooMany, count.str() + " spanning trees exceeds limit " +
                                        std::to_string(opts.max_trees));
  }
  if (g.order() == 1) {
    visit(Tree(1, std::vector<Edge>{}));
    return;
  }
  SpanningTreeWalker(g, visit).run();
}

std::vector<Tree> enumerate_spanning_trees(const Graph& g, const SpanningOptions& opts) {
  std::vector<Tree> out;
  for_each_spanning_tree(
      g,
      [&](const Tree& t) {
        out.push_back(t);
        return true;
      },
      opts);
  return out;
}

SpanningMinimum burning_number_via_spanning_trees(const Graph& g, const SpanningOptions& span_opts,
                                                  const SolverOptions& solver_opts) {
  if (g.order() > solver_opts.max_order) {
    throw Error(ErrorKind::TooLarge, std::to_string(g.order()) + " vertices exceeds exact limit " +
                                         std::to_string(solver_opts.max_order));
  }
  SpanningMinimum best;
  best.k = std::numeric_limits<int>::max();
  std::uint64_t index = 0;
  for_each_spanning_tree(
      g,
      [&](const Tree& t) {
        // Only strictly shorter schedules can improve on the current best, so
        // each tree is deepened up to best.k - 1 at most.
        int cap = std::min(best.k - 1, t.order());
        for (int k = 1; k <= cap; ++k) {
          if (auto m = find_schedule_of_length(t.graph(), {}, k)) {
            best.k = k;
            best.tree = t;
            best.schedule = BurningSchedule{std::move(m->sources)};
            best.tree_index = index;
            break;
          }
        }
        ++index;
        return best.k > 1;
      },
      span_opts);
  best.trees_examined = index;
  return best;
}

HistResult find_hist(const Graph& g, const HistOptions& opts) {
  require_connected(g);
  if (g.order() > opts.max_order) {
    throw Error(ErrorKind::TooLarge, std::to_string(g.order()) + " vertices exceeds HIST limit " +
                                         std::to_string(opts.max_order));
  }
  HistSearch search(g);
  HistResult result;
  result.tree = search.run();
  result.found = result.tree.has_value();
  result.nodes = search.nodes();
  return result;
}

std::optional<CertifiedPlan> hist_bound(const Graph& g, const HistOptions& opts) {
  HistResult hist = find_hist(g, opts);
  if (!hist.found) return std::nullopt;
  CertifiedPlan plan = hit_schedule(*hist.tree);
  plan.verification = simulate(g, plan.schedule);
  if (!plan.verification.complete() || plan.schedule.length() > plan.bound) {
    throw Error(ErrorKind::PlanVerificationFailed, "HIST plan does not burn the host graph");
  }
  return plan;
}

}  // namespace burnkit

#include "burnkit/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

namespace burnkit {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedEdge: return "MalformedEdge";
    case ErrorKind::NotAnEdge: return "NotAnEdge";
    case ErrorKind::NotDegreeTwo: return "NotDegreeTwo";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::InvalidSource: return "InvalidSource";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::TooMany: return "TooMany";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NotAHIT: return "NotAHIT";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::BaseScheduleIncomplete: return "BaseScheduleIncomplete";
    case ErrorKind::LiftVerificationFailed: return "LiftVerificationFailed";
    case ErrorKind::ProjectionVerificationFailed: return "ProjectionVerificationFailed";
    case ErrorKind::PlanVerificationFailed: return "PlanVerificationFailed";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Graph::Graph(int n, std::span<const Edge> edges) {
  if (n < 0) throw Error(ErrorKind::MalformedEdge, "negative vertex count");
  adj_.resize(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw Error(ErrorKind::MalformedEdge,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    if (u == v) throw Error(ErrorKind::MalformedEdge, "self-loop at " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& nb = adj_[v];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
      throw Error(ErrorKind::MalformedEdge, "duplicate edge at " + std::to_string(v));
    }
  }
  m_ = static_cast<int>(edges.size());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!valid(u) || !valid(v)) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph build_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

std::vector<int> bfs_distances(const Graph& g, std::span<const Vertex> sources) {
  std::vector<int> dist(g.order(), -1);
  std::queue<Vertex> queue;
  for (Vertex s : sources) {
    if (!g.valid(s)) throw Error(ErrorKind::InvalidSource, "vertex " + std::to_string(s));
    if (dist[s] != 0) {
      dist[s] = 0;
      queue.push(s);
    }
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  return bfs_distances(g, std::span<const Vertex>(&source, 1));
}

std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
  if (!g.valid(v)) throw Error(ErrorKind::InvalidSource, "vertex " + std::to_string(v));
  int d = bfs_distances(g, u)[v];
  if (d < 0) return std::nullopt;
  return d;
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  std::vector<std::vector<int>> out;
  out.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out.push_back(bfs_distances(g, v));
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

Tree::Tree(Graph g) : g_(std::move(g)) {
  int n = g_.order();
  if (n == 0) throw Error(ErrorKind::NotATree, "empty graph");
  if (g_.edge_count() != n - 1) {
    throw Error(ErrorKind::NotATree, std::to_string(g_.edge_count()) + " edges on " +
                                         std::to_string(n) + " vertices");
  }
  if (!is_connected(g_)) throw Error(ErrorKind::NotATree, "not connected");
  for (Vertex v = 0; v < n; ++v) {
    if (g_.degree(v) == 1) leaves_.push_back(v);
    else if (g_.degree(v) >= 2) internal_.push_back(v);
  }
}

RootedTree root_tree(const Tree& t, Vertex root) {
  int n = t.order();
  RootedTree r;
  r.root = root;
  r.parent.assign(n, kNoVertex);
  r.subtree_size.assign(n, 1);
  r.order.reserve(n);
  std::vector<bool> seen(n, false);
  r.order.push_back(root);
  seen[root] = true;
  for (std::size_t i = 0; i < r.order.size(); ++i) {
    Vertex u = r.order[i];
    for (Vertex w : t.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = true;
        r.parent[w] = u;
        r.order.push_back(w);
      }
    }
  }
  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
    if (r.parent[*it] != kNoVertex) r.subtree_size[r.parent[*it]] += r.subtree_size[*it];
  }
  return r;
}

int RootedTree::side_size(Vertex x, Vertex y) const {
  if (parent[x] == y) return subtree_size[x];
  return subtree_size[root] - subtree_size[y];
}

BridgeSide bridge_component(const Tree& t, Vertex x, Vertex y) {
  if (!t.has_edge(x, y)) {
    throw Error(ErrorKind::NotAnEdge, std::to_string(x) + "-" + std::to_string(y));
  }
  BridgeSide side{x, y, {}};
  std::vector<bool> seen(t.order(), false);
  seen[x] = true;
  seen[y] = true;
  std::vector<Vertex> stack{x};
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    side.vertices.push_back(u);
    for (Vertex w : t.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  std::sort(side.vertices.begin(), side.vertices.end());
  return side;
}

Smoothing smooth(const Tree& t, Vertex v) {
  if (v < 0 || v >= t.order() || t.degree(v) != 2) {
    throw Error(ErrorKind::NotDegreeTwo, "vertex " + std::to_string(v));
  }
  int n = t.order();
  Smoothing s;
  s.removed = v;
  s.old_to_new.assign(n, kNoVertex);
  for (Vertex u = 0; u < n; ++u) {
    if (u == v) continue;
    s.old_to_new[u] = static_cast<Vertex>(s.new_to_old.size());
    s.new_to_old.push_back(u);
  }
  std::vector<Edge> edges;
  edges.reserve(n - 2);
  for (auto [a, b] : t.edges()) {
    if (a != v && b != v) edges.emplace_back(s.old_to_new[a], s.old_to_new[b]);
  }
  Vertex a = t.neighbors(v)[0];
  Vertex b = t.neighbors(v)[1];
  edges.emplace_back(s.old_to_new[a], s.old_to_new[b]);
  s.tree = Tree(n - 1, edges);
  return s;
}

Subtree induced_subtree(const Tree& t, std::span<const Vertex> vertices) {
  Subtree out;
  out.original.assign(vertices.begin(), vertices.end());
  std::sort(out.original.begin(), out.original.end());
  std::vector<Vertex> to_new(t.order(), kNoVertex);
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    to_new[out.original[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (Vertex u : out.original)
    for (Vertex w : t.neighbors(u))
      if (u < w && to_new[w] != kNoVertex) edges.emplace_back(to_new[u], to_new[w]);
  out.tree = Tree(static_cast<int>(out.original.size()), edges);
  return out;
}

bool is_hit(const Tree& t) {
  for (Vertex v = 0; v < t.order(); ++v)
    if (t.degree(v) == 2) return false;
  return true;
}

int internal_vertex_count(const Tree& t) { return static_cast<int>(t.internal_vertices().size()); }

int degree_two_count(const Tree& t) {
  int d = 0;
  for (Vertex v = 0; v < t.order(); ++v) d += t.degree(v) == 2;
  return d;
}

int ceil_sqrt(std::int64_t n) {
  if (n <= 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r < n) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= n) --r;
  return static_cast<int>(r);
}

}  // namespace burnkit

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "burnkit/error.hpp"

namespace burnkit {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr Vertex kNoVertex = -1;

// Finite simple undirected graph on vertices 0..n-1. Neighbor lists are kept
// sorted so that every traversal below is deterministic.
class Graph {
 public:
  Graph() = default;

  // Throws Error(MalformedEdge) on out-of-range ids, self-loops or duplicates.
  Graph(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return m_; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  bool valid(Vertex v) const { return v >= 0 && v < order(); }
  bool has_edge(Vertex u, Vertex v) const;

  // Canonical edge list: u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  int m_ = 0;
};

Graph build_graph(int n, std::span<const Edge> edges);

// Shortest-path length in edges, or nullopt when u and v are disconnected.
std::optional<int> distance(const Graph& g, Vertex u, Vertex v);

// BFS distances from one source; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

// Multi-source variant: distance to the nearest member of `sources`.
std::vector<int> bfs_distances(const Graph& g, std::span<const Vertex> sources);

std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);

// A connected graph with n-1 edges. Validated on construction.
//
// For n == 1 the single vertex is neither a leaf nor internal.
class Tree {
 public:
  Tree() = default;
  explicit Tree(Graph g);
  Tree(int n, std::span<const Edge> edges) : Tree(Graph(n, edges)) {}

  const Graph& graph() const { return g_; }
  int order() const { return g_.order(); }
  int degree(Vertex v) const { return g_.degree(v); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return g_.neighbors(v); }
  bool has_edge(Vertex u, Vertex v) const { return g_.has_edge(u, v); }
  std::vector<Edge> edges() const { return g_.edges(); }

  const std::vector<Vertex>& leaves() const { return leaves_; }
  const std::vector<Vertex>& internal_vertices() const { return internal_; }

  friend bool operator==(const Tree& a, const Tree& b) { return a.g_ == b.g_; }

 private:
  Graph g_;
  std::vector<Vertex> leaves_;
  std::vector<Vertex> internal_;
};

// Parent pointers and subtree sizes of a tree rooted at `root`.
struct RootedTree {
  Vertex root = kNoVertex;
  std::vector<Vertex> parent;
  std::vector<int> subtree_size;
  std::vector<Vertex> order;  // BFS order from the root

  // Size of the component containing `x` after deleting the edge xy.
  int side_size(Vertex x, Vertex y) const;
};

RootedTree root_tree(const Tree& t, Vertex root);

// The component T_x(xy) that contains x once the edge xy is removed.
struct BridgeSide {
  Vertex x = kNoVertex;
  Vertex y = kNoVertex;
  std::vector<Vertex> vertices;  // sorted ascending

  int size() const { return static_cast<int>(vertices.size()); }
};

BridgeSide bridge_component(const Tree& t, Vertex x, Vertex y);

// Result of suppressing a degree-2 vertex. Survivors keep their relative
// order: ids above the removed vertex shift down by one.
struct Smoothing {
  Tree tree;
  Vertex removed = kNoVertex;
  std::vector<Vertex> old_to_new;  // kNoVertex for the removed vertex
  std::vector<Vertex> new_to_old;
};

Smoothing smooth(const Tree& t, Vertex v);

// Tree induced on a connected vertex subset. `original` maps new ids back.
struct Subtree {
  Tree tree;
  std::vector<Vertex> original;
};

Subtree induced_subtree(const Tree& t, std::span<const Vertex> vertices);

bool is_hit(const Tree& t);
int internal_vertex_count(const Tree& t);
int degree_two_count(const Tree& t);

// ceil(sqrt(n)) computed in integers.
int ceil_sqrt(std::int64_t n);

}  // namespace burnkit

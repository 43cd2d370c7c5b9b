#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "burnkit/graph.hpp"

namespace burnkit {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
// n vertices in total: center 0 and leaves 1..n-1.
Graph star_graph(int n);
// Hub 0 with one path of each given length hanging off it.
Graph spider_graph(const std::vector<int>& legs);
// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
Graph petersen_graph();

// Uniform labeled tree on n vertices decoded from a random Prufer word.
Tree random_tree(int n, std::uint64_t seed);
Tree tree_from_prufer(int n, const std::vector<Vertex>& word);

// A HIT on exactly n vertices: random trees are augmented with a leaf on
// every degree-2 vertex and redrawn until the result has n vertices, then
// randomly relabeled. No HIT exists on 3 vertices.
Tree random_hit(int n, std::uint64_t seed);

// Connected graph on n vertices: a random tree plus each remaining pair
// independently with probability p.
Graph random_connected_graph(int n, double p, std::uint64_t seed);

// Isomorphism-invariant encoding of a free tree.
std::string canonical_form(const Tree& t);

// One representative per isomorphism class of HITs on n vertices, ordered by
// canonical form.
std::vector<Tree> enumerate_hits(int n);

struct GenParams {
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<int> legs;
};

// Family names: path, cycle, complete, star, spider, petersen, random_tree,
// random_hit.
Graph generate(const std::string& family, const GenParams& params);

}  // namespace burnkit

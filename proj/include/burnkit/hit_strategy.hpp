#pragma once

#include <vector>

#include "burnkit/burning.hpp"
#include "burnkit/graph.hpp"

namespace burnkit {

// Vertex x whose neighbor sides are all lighter than `threshold` except for
// the side across the edge to `heavy`, which keeps x on a side of at least
// `threshold` vertices. threshold = 2*ceil(sqrt(n)) - 1.
struct Anchor {
  Vertex x = kNoVertex;
  Vertex heavy = kNoVertex;            // y, last in `neighbors`
  std::vector<Vertex> neighbors;       // light neighbors ascending, then y
  std::vector<int> light_side_sizes;   // |T_v(xv)| for every neighbor but y
  int heavy_side_size = 0;             // |T_x(xy)|
  int threshold = 0;
  int steps = 0;                       // vertices visited by the walk
};

Anchor find_anchor(const Tree& t);

// Schedule plus the bound it certifies and the simulation that proves it.
struct CertifiedPlan {
  BurningSchedule schedule;
  int bound = 0;
  BurnMap verification;
};

// Turns a complete schedule for smooth(t, v) into a modified schedule for t
// with v preburned, of the same length.
ModifiedSchedule lift_schedule(const Tree& t, Vertex v, const BurningSchedule& s);

// Schedule of length at most ceil(sqrt(n)) for a tree with no degree-2 vertex.
CertifiedPlan hit_schedule(const Tree& t);

struct Augmentation {
  Tree tree;
  std::vector<Vertex> hosts;  // hosts[i] receives the new leaf n + i
};

// Hangs one new leaf on every degree-2 vertex.
Augmentation augment_degree2(const Tree& t);

// Plan for an arbitrary tree within ceil(sqrt(n + d)) rounds, d the number
// of degree-2 vertices.
CertifiedPlan tree_schedule_via_augmentation(const Tree& t);

}  // namespace burnkit

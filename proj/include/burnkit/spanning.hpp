#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "burnkit/burning.hpp"
#include "burnkit/graph.hpp"
#include "burnkit/hit_strategy.hpp"

namespace burnkit {

struct SpanningOptions {
  std::uint64_t max_trees = 1'000'000;
};

// Number of spanning trees by the matrix-tree theorem, exact, as a decimal
// string (counts overflow 64 bits quickly on dense graphs).
std::string spanning_tree_count(const Graph& g);

// Calls `visit` once per spanning tree in a fixed order; stops early when
// `visit` returns false. Throws TooMany when the count exceeds the limit.
void for_each_spanning_tree(const Graph& g, const std::function<bool(const Tree&)>& visit,
                            const SpanningOptions& opts = {});

std::vector<Tree> enumerate_spanning_trees(const Graph& g, const SpanningOptions& opts = {});

struct SpanningMinimum {
  int k = 0;
  Tree tree;
  BurningSchedule schedule;
  std::uint64_t tree_index = 0;  // position in enumeration order
  std::uint64_t trees_examined = 0;
};

SpanningMinimum burning_number_via_spanning_trees(const Graph& g,
                                                  const SpanningOptions& span_opts = {},
                                                  const SolverOptions& solver_opts = {});

struct HistOptions {
  int max_order = 20;
};

struct HistResult {
  bool found = false;
  std::optional<Tree> tree;
  std::uint64_t nodes = 0;
};

// Exhaustive search for a spanning tree without degree-2 vertices.
HistResult find_hist(const Graph& g, const HistOptions& opts = {});

// Plan within ceil(sqrt(n)) built on a HIST and verified on g itself.
std::optional<CertifiedPlan> hist_bound(const Graph& g, const HistOptions& opts = {});

}  // namespace burnkit

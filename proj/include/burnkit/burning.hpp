#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "burnkit/graph.hpp"

namespace burnkit {

// Ordered source list; round i burns sources[i-1]. Repeats are allowed and
// act as no-ops once the vertex is on fire.
struct BurningSchedule {
  std::vector<Vertex> sources;

  int length() const { return static_cast<int>(sources.size()); }
  friend bool operator==(const BurningSchedule&, const BurningSchedule&) = default;
};

// Like BurningSchedule, but every vertex of `preburn` also ignites in round 1.
struct ModifiedSchedule {
  std::vector<Vertex> preburn;
  std::vector<Vertex> sources;

  int length() const { return static_cast<int>(sources.size()); }
  friend bool operator==(const ModifiedSchedule&, const ModifiedSchedule&) = default;
};

inline constexpr int kUnburned = 0;

struct BurnMap {
  std::vector<int> rounds;  // 1-based burn round, kUnburned if never reached
  int completion = kUnburned;  // max round when complete, kUnburned otherwise

  bool complete() const { return completion != kUnburned; }
  friend bool operator==(const BurnMap&, const BurnMap&) = default;
};

// Runs exactly |s| rounds of the burning process.
BurnMap simulate(const Graph& g, const BurningSchedule& s);
BurnMap simulate_modified(const Graph& g, const ModifiedSchedule& m);

bool is_complete(const BurnMap& bm);

struct SolverOptions {
  int max_order = 64;
};

struct SolverStats {
  std::uint64_t nodes = 0;
};

struct ExactResult {
  int k = 0;
  BurningSchedule witness;
  SolverStats stats;
};

struct ModifiedExactResult {
  int k = 0;
  ModifiedSchedule witness;
  SolverStats stats;
};

// Minimum schedule length by iterative deepening on k. The witness is the
// lexicographically smallest complete schedule of that length.
ExactResult burning_number_exact(const Graph& g, const SolverOptions& opts = {});

ModifiedExactResult modified_burning_number_exact(const Graph& g, std::span<const Vertex> preburn,
                                                  const SolverOptions& opts = {});

// Whether some schedule of exactly k sources completes the graph.
std::optional<ModifiedSchedule> find_schedule_of_length(const Graph& g,
                                                        std::span<const Vertex> preburn, int k,
                                                        SolverStats* stats = nullptr);

}  // namespace burnkit

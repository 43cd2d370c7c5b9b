#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace burnkit {

struct BenchSpec {
  std::vector<std::string> families;  // tree families: path, star, spider, random_tree, random_hit
  std::vector<int> sizes;
  std::vector<std::uint64_t> seeds{1};
  int exact_limit = 24;               // exact burning number only up to this order
};

BenchSpec bench_spec_from_json(const nlohmann::json& j);

struct BenchRecord {
  std::string instance;
  std::string family;
  int size = 0;  // requested size
  int n = 0;
  int d = 0;
  std::optional<int> exact;
  int plan_length = 0;
  std::optional<int> bound_hit;  // only for HITs
  int bound_cor8 = 0;            // ceil(sqrt(n + d))
  int bound_das = 0;             // ceil(sqrt(n + d + 8)) - 1
  double plan_ms = 0;
  double exact_ms = 0;
  std::string error;
};

int leaf_augmentation_bound(int n, int d);
int competing_tree_bound(int n, int d);

struct BenchBucket {
  int size = 0;
  int cor8_at_most_das = 0;
  int cor8_above_das = 0;
  std::optional<int> max_slack;  // plan length - exact, over rows with exact
};

struct BenchReport {
  std::vector<BenchRecord> records;
  std::vector<BenchBucket> buckets;
};

// Throws PlanVerificationFailed when a row violates its bounds.
BenchReport run_bench(const BenchSpec& spec);

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);
void write_bench_summary(std::ostream& out, const std::vector<BenchBucket>& buckets);

}  // namespace burnkit

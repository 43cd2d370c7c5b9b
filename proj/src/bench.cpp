#include "burnkit/bench.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <ostream>

#include "burnkit/burning.hpp"
#include "burnkit/generators.hpp"
#include "burnkit/hit_strategy.hpp"

namespace burnkit {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

bool seeded(const std::string& family) { return family == "random_tree" || family == "random_hit"; }

Tree bench_tree(const std::string& family, int size, std::uint64_t seed) {
  if (family == "spider") {
    // Three legs sharing size - 1 vertices as evenly as possible.
    std::vector<int> legs(3, (size - 1) / 3);
    for (int i = 0; i < (size - 1) % 3; ++i) ++legs[i];
    std::erase(legs, 0);
    return Tree(spider_graph(legs));
  }
  return Tree(generate(family, GenParams{size, seed, {}}));
}

void check_row(const BenchRecord& r) {
  auto fail = [&](const std::string& what) {
    throw Error(ErrorKind::PlanVerificationFailed, r.instance + ": " + what);
  };
  if (r.plan_length > r.bound_cor8) fail("plan longer than ceil(sqrt(n+d))");
  if (r.bound_hit && r.plan_length > *r.bound_hit) fail("plan longer than ceil(sqrt(n))");
  if (r.exact && *r.exact > r.plan_length) fail("exact burning number exceeds plan length");
}

}  // namespace

int leaf_augmentation_bound(int n, int d) { return ceil_sqrt(static_cast<std::int64_t>(n) + d); }

int competing_tree_bound(int n, int d) { return ceil_sqrt(static_cast<std::int64_t>(n) + d + 8) - 1; }

BenchSpec bench_spec_from_json(const nlohmann::json& j) {
  try {
    BenchSpec spec;
    spec.families = j.at("families").get<std::vector<std::string>>();
    spec.sizes = j.at("sizes").get<std::vector<int>>();
    if (j.contains("seeds")) spec.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    if (j.contains("exact_limit")) spec.exact_limit = j.at("exact_limit").get<int>();
    if (spec.families.empty() || spec.sizes.empty() || spec.seeds.empty()) {
      throw Error(ErrorKind::BadParams, "bench spec needs families, sizes and seeds");
    }
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

BenchReport run_bench(const BenchSpec& spec) {
  BenchReport report;
  for (const auto& family : spec.families) {
    for (int size : spec.sizes) {
      for (std::size_t si = 0; si < spec.seeds.size(); ++si) {
        if (!seeded(family) && si > 0) break;
        std::uint64_t seed = spec.seeds[si];
        BenchRecord r;
        r.family = family;
        r.size = size;
        r.instance = family + "-" + std::to_string(size) + (seeded(family) ? "-s" + std::to_string(seed) : "");
        try {
          Tree t = bench_tree(family, size, seed);
          r.n = t.order();
          r.d = degree_two_count(t);
          r.bound_cor8 = leaf_augmentation_bound(r.n, r.d);
          r.bound_das = competing_tree_bound(r.n, r.d);
          if (r.d == 0) r.bound_hit = ceil_sqrt(r.n);

          auto start = Clock::now();
          CertifiedPlan plan = tree_schedule_via_augmentation(t);
          r.plan_ms = elapsed_ms(start);
          r.plan_length = plan.schedule.length();

          if (r.n <= spec.exact_limit) {
            start = Clock::now();
            r.exact = burning_number_exact(t.graph(), SolverOptions{spec.exact_limit}).k;
            r.exact_ms = elapsed_ms(start);
          }
        } catch (const Error& e) {
          if (e.is_internal()) throw;
          r.error = e.what();
        }
        if (r.error.empty()) check_row(r);
        report.records.push_back(std::move(r));
      }
    }
  }

  std::map<int, BenchBucket> buckets;
  for (const auto& r : report.records) {
    if (!r.error.empty()) continue;
    auto& b = buckets[r.size];
    b.size = r.size;
    (r.bound_cor8 <= r.bound_das ? b.cor8_at_most_das : b.cor8_above_das) += 1;
    if (r.exact) b.max_slack = std::max(b.max_slack.value_or(0), r.plan_length - *r.exact);
  }
  for (auto& [size, b] : buckets) report.buckets.push_back(b);
  return report;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "instance,family,size,n,d,exact_b,plan_length,bound_hit,bound_cor8,bound_das,plan_ms,exact_ms,"
         "error\n";
  for (const auto& r : records) {
    out << r.instance << ',' << r.family << ',' << r.size << ',' << r.n << ',' << r.d << ',';
    if (r.exact) out << *r.exact;
    out << ',' << r.plan_length << ',';
    if (r.bound_hit) out << *r.bound_hit;
    out << ',' << r.bound_cor8 << ',' << r.bound_das << ',' << r.plan_ms << ',' << r.exact_ms << ',';
    std::string error = r.error;
    std::replace(error.begin(), error.end(), '"', '\'');
    out << '"' << error << "\"\n";
  }
}

void write_bench_summary(std::ostream& out, const std::vector<BenchBucket>& buckets) {
  out << "size,cor8_le_das,cor8_gt_das,max_slack\n";
  for (const auto& b : buckets) {
    out << b.size << ',' << b.cor8_at_most_das << ',' << b.cor8_above_das << ',';
    if (b.max_slack) out << *b.max_slack;
    out << '\n';
  }
}

}  // namespace burnkit

#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "burnkit/burning.hpp"
#include "burnkit/graph.hpp"
#include "burnkit/hit_strategy.hpp"

namespace burnkit {

// Edge-list interchange: a header line `n m`, then m lines `u v`.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

nlohmann::json to_json(const BurningSchedule& s);
nlohmann::json to_json(const ModifiedSchedule& m);
nlohmann::json to_json(const BurnMap& bm);
nlohmann::json to_json(const CertifiedPlan& plan);

// Accepts both schedule objects and plan objects; `preburn` may be absent.
ModifiedSchedule schedule_from_json(const nlohmann::json& j);

}  // namespace burnkit

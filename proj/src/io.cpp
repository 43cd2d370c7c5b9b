#include "burnkit/io.hpp"

#include <fstream>
#include <sstream>

namespace burnkit {

Graph read_edge_list(std::istream& in) {
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw Error(ErrorKind::Parse, "expected header `n m`");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) {
      throw Error(ErrorKind::Parse, "expected " + std::to_string(m) + " edges, read " + std::to_string(i));
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorKind::MalformedEdge,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string extra;
  if (in >> extra) throw Error(ErrorKind::Parse, "trailing data after edge list");
  return Graph(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

nlohmann::json to_json(const BurningSchedule& s) {
  return {{"preburn", nlohmann::json::array()}, {"sources", s.sources}};
}

nlohmann::json to_json(const ModifiedSchedule& m) {
  return {{"preburn", m.preburn}, {"sources", m.sources}};
}

nlohmann::json to_json(const BurnMap& bm) {
  return {{"rounds", bm.rounds}, {"completion", bm.completion}};
}

nlohmann::json to_json(const CertifiedPlan& plan) {
  return {{"bound", plan.bound},
          {"sources", plan.schedule.sources},
          {"rounds", plan.verification.rounds},
          {"completion", plan.verification.completion}};
}

ModifiedSchedule schedule_from_json(const nlohmann::json& j) {
  try {
    ModifiedSchedule m;
    if (!j.is_object() || !j.contains("sources")) throw Error(ErrorKind::Parse, "missing `sources`");
    m.sources = j.at("sources").get<std::vector<Vertex>>();
    if (j.contains("preburn") && !j.at("preburn").is_null()) {
      m.preburn = j.at("preburn").get<std::vector<Vertex>>();
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

}  // namespace burnkit

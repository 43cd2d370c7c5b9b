#include "burnkit/generators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <random>

#include "burnkit/hit_strategy.hpp"

namespace burnkit {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::BadParams, what);
}

Tree random_tree(int n, std::mt19937_64& rng) {
  std::vector<Vertex> word;
  if (n >= 3) {
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    word.resize(n - 2);
    for (auto& w : word) w = pick(rng);
  }
  return tree_from_prufer(n, word);
}

Tree relabel(const Tree& t, std::mt19937_64& rng) {
  std::vector<Vertex> perm(t.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (auto [u, v] : t.edges()) edges.emplace_back(perm[u], perm[v]);
  return Tree(t.order(), edges);
}

// Builds the rooted tree spelled by a balanced parenthesis string; vertex 0
// is the outermost pair.
Tree tree_from_code(const std::string& code) {
  std::vector<Edge> edges;
  std::vector<Vertex> stack;
  Vertex next = 0;
  for (char c : code) {
    if (c == '(') {
      if (!stack.empty()) edges.emplace_back(stack.back(), next);
      stack.push_back(next++);
    } else {
      stack.pop_back();
    }
  }
  return Tree(next, edges);
}

std::string encode_rooted(const Tree& t, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : t.neighbors(v))
    if (w != parent) kids.push_back(encode_rooted(t, w, v));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (auto& k : kids) out += k;
  out += ')';
  return out;
}

std::vector<Vertex> tree_centers(const Tree& t) {
  int n = t.order();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  std::vector<int> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer)
      for (Vertex w : t.neighbors(v))
        if (--deg[w] == 1) next.push_back(w);
    layer.swap(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph star_graph(int n) {
  require(n >= 1, "star needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph(n, edges);
}

Graph spider_graph(const std::vector<int>& legs) {
  std::vector<Edge> edges;
  Vertex next = 1;
  for (int len : legs) {
    require(len >= 1, "spider legs must have length >= 1");
    Vertex prev = 0;
    for (int i = 0; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph(next, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, i + 5);
  }
  return Graph(10, edges);
}

Tree tree_from_prufer(int n, const std::vector<Vertex>& word) {
  require(n >= 1, "tree needs n >= 1");
  if (n == 1) return Tree(1, std::vector<Edge>{});
  require(static_cast<int>(word.size()) == n - 2, "Prufer word must have n - 2 entries");
  std::vector<int> degree(n, 1);
  for (Vertex w : word) {
    require(w >= 0 && w < n, "Prufer entry out of range");
    ++degree[w];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex w : word) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, w);
    if (--degree[w] == 1) leaves.push(w);
  }
  Vertex a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Tree(n, edges);
}

Tree random_tree(int n, std::uint64_t seed) {
  require(n >= 1, "tree needs n >= 1");
  std::mt19937_64 rng(seed);
  return random_tree(n, rng);
}

Tree random_hit(int n, std::uint64_t seed) {
  require(n >= 1 && n != 3, "no HIT exists on " + std::to_string(n) + " vertices");
  std::mt19937_64 rng(seed);
  if (n <= 2) return relabel(random_tree(n, rng), rng);

  // About 37% of the vertices of a uniform tree have degree 2, so the
  // augmented size is roughly 1.37 m; adjust m toward the target as we go.
  int m = std::max(4, static_cast<int>(n / 1.37));
  for (int attempt = 0; attempt < 1'000'000; ++attempt) {
    m = std::clamp(m, 3, n);
    Augmentation aug = augment_degree2(random_tree(m, rng));
    int size = aug.tree.order();
    if (size == n) return relabel(aug.tree, rng);
    m += size < n ? 1 : -1;
  }
  throw Error(ErrorKind::BadParams, "could not draw a HIT on " + std::to_string(n) + " vertices");
}

Graph random_connected_graph(int n, double p, std::uint64_t seed) {
  require(n >= 1, "graph needs n >= 1");
  std::mt19937_64 rng(seed);
  Tree t = random_tree(n, rng);
  std::vector<Edge> edges = t.edges();
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!t.has_edge(u, v) && coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

std::string canonical_form(const Tree& t) {
  std::string best;
  for (Vertex c : tree_centers(t)) {
    std::string code = encode_rooted(t, c, kNoVertex);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

std::vector<Tree> enumerate_hits(int n) {
  require(n >= 1, "HIT enumeration needs n >= 1");
  if (n == 1) return {Tree(1, std::vector<Edge>{})};

  // Rooted trees in which every internal node has at least two children,
  // grouped by size. Rooting a HIT at a leaf leaves exactly such a tree
  // below the leaf.
  std::vector<std::vector<std::string>> rooted(n);
  rooted[1] = {"()"};
  std::vector<std::pair<int, const std::string*>> pool;  // (size, code), sizes < s
  for (int s = 2; s <= n - 1; ++s) {
    pool.clear();
    for (int sz = 1; sz < s; ++sz)
      for (const auto& code : rooted[sz]) pool.emplace_back(sz, &code);

    std::vector<std::size_t> picked;
    std::function<void(std::size_t, int)> choose = [&](std::size_t limit, int left) {
      if (left == 0) {
        if (picked.size() < 2) return;
        std::vector<std::string> kids;
        for (auto i : picked) kids.push_back(*pool[i].second);
        std::sort(kids.begin(), kids.end());
        std::string code = "(";
        for (auto& k : kids) code += k;
        code += ')';
        rooted[s].push_back(std::move(code));
        return;
      }
      for (std::size_t i = limit; i-- > 0;) {
        if (pool[i].first > left) continue;
        picked.push_back(i);
        choose(i + 1, left - pool[i].first);
        picked.pop_back();
      }
    };
    choose(pool.size(), s - 1);
  }

  std::map<std::string, Tree> classes;
  for (const auto& code : rooted[n - 1]) {
    Tree t = tree_from_code("(" + code + ")");
    classes.emplace(canonical_form(t), std::move(t));
  }
  std::vector<Tree> out;
  out.reserve(classes.size());
  for (auto& [form, t] : classes) out.push_back(std::move(t));
  return out;
}

Graph generate(const std::string& family, const GenParams& p) {
  if (family == "path") return path_graph(p.n);
  if (family == "cycle") return cycle_graph(p.n);
  if (family == "complete") return complete_graph(p.n);
  if (family == "star") return star_graph(p.n);
  if (family == "spider") return spider_graph(p.legs);
  if (family == "petersen") return petersen_graph();
  if (family == "random_tree") return random_tree(p.n, p.seed).graph();
  if (family == "random_hit") return random_hit(p.n, p.seed).graph();
  throw Error(ErrorKind::BadParams, "unknown family `" + family + "`");
}

}  // namespace burnkit

#include "sqfpow/corpus.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace sqfpow {

namespace {

// Rooted subtree encoding: children encodings sorted and concatenated inside
// parentheses. Equal strings iff the rooted trees are isomorphic.
std::string encode_rooted(const Graph& g, int root, int parent) {
  std::vector<std::string> child_codes;
  for (int u : elements(g.neighbors(root))) {
    if (u == parent) continue;
    child_codes.push_back(encode_rooted(g, u, root));
  }
  std::sort(child_codes.begin(), child_codes.end());
  std::string out = "(";
  for (const auto& c : child_codes) out += c;
  out += ")";
  return out;
}

// Centers of a tree given by its vertex list: peel leaf layers until at most
// two vertices remain.
std::vector<int> tree_centers(const Graph& g, const std::vector<int>& comp) {
  if (comp.size() <= 2) return comp;
  std::map<int, int> deg;
  Subset alive = 0;
  for (int v : comp) {
    deg[v] = g.degree(v);
    alive |= bit_of(v);
  }
  std::size_t remaining = comp.size();
  std::vector<int> layer;
  for (int v : comp)
    if (deg[v] <= 1) layer.push_back(v);
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      alive &= ~bit_of(v);
      --remaining;
      for (int u : elements(g.neighbors(v) & alive)) {
        if (--deg[u] == 1) next.push_back(u);
      }
    }
    layer = std::move(next);
  }
  return elements(alive);
}

std::string canonical_tree_code(const Graph& g, const std::vector<int>& comp) {
  const auto centers = tree_centers(g, comp);
  std::string best;
  for (int c : centers) {
    std::string code = encode_rooted(g, c, 0);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

}  // namespace

std::string canonical_forest_key(const Graph& g) {
  if (!is_forest(g)) throw std::domain_error("canonical_forest_key: not a forest");
  std::vector<std::string> codes;
  int isolated = 0;
  for (const auto& comp : connected_components(g)) {
    if (comp.size() == 1) {
      ++isolated;
      continue;
    }
    codes.push_back(canonical_tree_code(g, comp));
  }
  std::sort(codes.begin(), codes.end());
  std::string key = "i" + std::to_string(isolated);
  for (const auto& c : codes) key += "," + c;
  return key;
}

std::vector<Graph> all_trees(int n) {
  if (n < 1) throw std::invalid_argument("tree size must be >= 1");
  std::vector<Graph> current{Graph::from_edges(1, {})};
  for (int size = 2; size <= n; ++size) {
    std::set<std::string> seen;
    std::vector<Graph> next;
    for (const Graph& t : current) {
      for (int v = 1; v < size; ++v) {
        std::vector<Edge> edges = t.edges();
        edges.push_back({v, size});
        Graph candidate = Graph::from_edges(size, edges);
        if (seen.insert(canonical_forest_key(candidate)).second)
          next.push_back(std::move(candidate));
      }
    }
    current = std::move(next);
  }
  return current;
}

std::vector<Graph> all_forests(int n) {
  if (n < 1) throw std::invalid_argument("forest size must be >= 1");
  // Trees of each size, in a fixed order; a forest is a multiset of trees
  // with sizes summing to n (size-1 trees are the isolated vertices).
  std::vector<std::vector<Graph>> trees_by_size(static_cast<std::size_t>(n) + 1);
  for (int s = 1; s <= n; ++s) trees_by_size[static_cast<std::size_t>(s)] = all_trees(s);

  std::vector<std::pair<int, int>> catalog;  // (size, index), larger sizes first
  for (int s = n; s >= 1; --s)
    for (std::size_t i = 0; i < trees_by_size[static_cast<std::size_t>(s)].size(); ++i)
      catalog.push_back({s, static_cast<int>(i)});

  std::vector<Graph> out;
  std::vector<std::pair<int, int>> chosen;
  auto emit = [&]() {
    std::vector<Edge> edges;
    int offset = 0;
    for (auto [s, i] : chosen) {
      const Graph& t = trees_by_size[static_cast<std::size_t>(s)][static_cast<std::size_t>(i)];
      for (auto [u, v] : t.edges()) edges.push_back({u + offset, v + offset});
      offset += s;
    }
    out.push_back(Graph::from_edges(n, edges));
  };
  // Multisets: catalog indices non-decreasing.
  auto rec = [&](auto&& self, std::size_t from, int left) -> void {
    if (left == 0) {
      emit();
      return;
    }
    for (std::size_t c = from; c < catalog.size(); ++c) {
      if (catalog[c].first > left) continue;
      chosen.push_back(catalog[c]);
      self(self, c, left - catalog[c].first);
      chosen.pop_back();
    }
  };
  rec(rec, 0, n);
  return out;
}

std::vector<Graph> all_forests_up_to(int n) {
  std::vector<Graph> out;
  for (int m = 1; m <= n; ++m) {
    auto fs = all_forests(m);
    out.insert(out.end(), fs.begin(), fs.end());
  }
  return out;
}

Graph broom_graph(int handle, int bristles) {
  if (handle < 1 || bristles < 0) throw std::invalid_argument("bad broom shape");
  std::vector<Edge> edges;
  for (int i = 1; i < handle; ++i) edges.push_back({i, i + 1});
  for (int b = 1; b <= bristles; ++b) edges.push_back({handle, handle + b});
  return Graph::from_edges(handle + bristles, edges);
}

Graph random_graph(int n, double edge_probability, std::uint64_t seed) {
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("bad vertex count");
  std::mt19937_64 rng(seed ^ 0xda3e39cb94b95bdbULL);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (coin(rng) < edge_probability) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

}  // namespace sqfpow

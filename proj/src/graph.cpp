#include "sqfpow/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <stdexcept>

namespace sqfpow {

Graph Graph::from_edges(int n, const std::vector<Edge>& pairs) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("vertex count must be in 1.." + std::to_string(kMaxVertices));
  Graph g;
  g.n_ = n;
  g.adj_.assign(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) {
    if (u == v)
      throw std::invalid_argument("loop at vertex " + std::to_string(u));
    if (u < 1 || u > n || v < 1 || v > n)
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") out of range 1.." + std::to_string(n));
    edges.push_back(make_edge(u, v));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (auto [u, v] : edges) {
    g.adj_[static_cast<std::size_t>(u)] |= bit_of(v);
    g.adj_[static_cast<std::size_t>(v)] |= bit_of(u);
  }
  g.edges_ = std::move(edges);
  return g;
}

Subset Graph::covered_vertices() const {
  Subset s = 0;
  for (Edge e : edges_) s |= edge_set(e);
  return s;
}

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
  return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
  e.push_back({1, n});
  return Graph::from_edges(n, e);
}

Graph star_graph(int n) {
  if (n < 1) throw std::invalid_argument("star needs n >= 1");
  std::vector<Edge> e;
  for (int i = 2; i <= n; ++i) e.push_back({1, i});
  return Graph::from_edges(n, e);
}

Graph make_family(const std::string& kind, int n) {
  if (kind == "path") return path_graph(n);
  if (kind == "cycle") return cycle_graph(n);
  if (kind == "star") return star_graph(n);
  throw std::invalid_argument("unknown family: " + kind);
}

namespace {

// Labeled tree on labels[0..m-1] decoded from a random Pruefer sequence.
std::vector<Edge> random_tree_edges(const std::vector<int>& labels, std::mt19937_64& rng) {
  const int m = static_cast<int>(labels.size());
  std::vector<Edge> out;
  if (m <= 1) return out;
  if (m == 2) {
    out.push_back(make_edge(labels[0], labels[1]));
    return out;
  }
  std::vector<int> pruefer(static_cast<std::size_t>(m - 2));
  for (auto& x : pruefer) x = static_cast<int>(rng() % static_cast<std::uint64_t>(m));
  std::vector<int> deg(static_cast<std::size_t>(m), 1);
  for (int x : pruefer) ++deg[static_cast<std::size_t>(x)];
  // Standard decode: repeatedly join the smallest leaf to the next code entry.
  std::vector<bool> used(static_cast<std::size_t>(m), false);
  for (int code : pruefer) {
    int leaf = -1;
    for (int i = 0; i < m; ++i) {
      if (deg[static_cast<std::size_t>(i)] == 1 && !used[static_cast<std::size_t>(i)]) {
        leaf = i;
        break;
      }
    }
    out.push_back(make_edge(labels[static_cast<std::size_t>(leaf)],
                            labels[static_cast<std::size_t>(code)]));
    used[static_cast<std::size_t>(leaf)] = true;
    --deg[static_cast<std::size_t>(code)];
  }
  int a = -1, b = -1;
  for (int i = 0; i < m; ++i) {
    if (deg[static_cast<std::size_t>(i)] == 1 && !used[static_cast<std::size_t>(i)]) {
      (a < 0 ? a : b) = i;
    }
  }
  out.push_back(make_edge(labels[static_cast<std::size_t>(a)], labels[static_cast<std::size_t>(b)]));
  return out;
}

}  // namespace

Graph random_forest(int n, std::uint64_t seed) {
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("bad vertex count");
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const int max_components = std::max(1, n / 2);
  const int c = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_components));

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);

  // c-1 cut points split the shuffled labels into non-empty blocks.
  std::vector<int> cuts;
  if (c > 1) {
    std::vector<int> positions(static_cast<std::size_t>(n - 1));
    std::iota(positions.begin(), positions.end(), 1);
    std::shuffle(positions.begin(), positions.end(), rng);
    cuts.assign(positions.begin(), positions.begin() + (c - 1));
    std::sort(cuts.begin(), cuts.end());
  }
  cuts.push_back(n);

  std::vector<Edge> edges;
  int start = 0;
  for (int cut : cuts) {
    std::vector<int> block(perm.begin() + start, perm.begin() + cut);
    auto tree = random_tree_edges(block, rng);
    edges.insert(edges.end(), tree.begin(), tree.end());
    start = cut;
  }
  return Graph::from_edges(n, edges);
}

void for_each_k_matching(const Graph& g, int k,
                         const std::function<bool(const Matching&)>& visit) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const auto& edges = g.edges();
  Matching current;
  current.edges.reserve(static_cast<std::size_t>(k));
  bool stopped = false;
  auto rec = [&](auto&& self, std::size_t from, Subset used, int need) -> void {
    if (stopped) return;
    if (need == 0) {
      if (!visit(current)) stopped = true;
      return;
    }
    for (std::size_t i = from; i < edges.size(); ++i) {
      if (edges.size() - i < static_cast<std::size_t>(need)) break;
      const Subset es = edge_set(edges[i]);
      if (es & used) continue;
      current.edges.push_back(edges[i]);
      self(self, i + 1, used | es, need - 1);
      current.edges.pop_back();
      if (stopped) return;
    }
  };
  rec(rec, 0, 0, k);
}

std::vector<Matching> k_matchings(const Graph& g, int k) {
  std::vector<Matching> out;
  for_each_k_matching(g, k, [&](const Matching& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

void for_each_matching(const Graph& g,
                       const std::function<bool(const Matching&)>& visit) {
  const auto& edges = g.edges();
  Matching current;
  bool stopped = false;
  auto rec = [&](auto&& self, std::size_t from, Subset used) -> void {
    if (stopped) return;
    for (std::size_t i = from; i < edges.size(); ++i) {
      const Subset es = edge_set(edges[i]);
      if (es & used) continue;
      current.edges.push_back(edges[i]);
      if (!visit(current)) {
        stopped = true;
        current.edges.pop_back();
        return;
      }
      self(self, i + 1, used | es);
      current.edges.pop_back();
      if (stopped) return;
    }
  };
  rec(rec, 0, 0);
}

int matching_number(const Graph& g) {
  const auto& edges = g.edges();
  int best = 0;
  auto rec = [&](auto&& self, std::size_t from, Subset used, int size) -> void {
    best = std::max(best, size);
    if (size + static_cast<int>(edges.size() - from) <= best) return;
    for (std::size_t i = from; i < edges.size(); ++i) {
      const Subset es = edge_set(edges[i]);
      if (es & used) continue;
      self(self, i + 1, used | es, size + 1);
    }
  };
  rec(rec, 0, 0, 0);
  return best;
}

bool is_gap(const Graph& g, Edge e, Edge f) {
  e = make_edge(e.first, e.second);
  f = make_edge(f.first, f.second);
  if (!g.has_edge(e.first, e.second) || !g.has_edge(f.first, f.second))
    throw std::invalid_argument("is_gap: edge not in graph");
  if (e == f) throw std::invalid_argument("is_gap: edges must differ");
  if (edge_set(e) & edge_set(f)) return false;
  const Subset fs = edge_set(f);
  return !(g.neighbors(e.first) & fs) && !(g.neighbors(e.second) & fs);
}

int induced_matching_number(const Graph& g) {
  // Max matching whose vertex set induces exactly the matching's edges.
  const auto& edges = g.edges();
  int best = 0;
  auto induced_edge_count = [&](Subset vs) {
    int c = 0;
    for (Edge e : edges)
      if (subset_of(edge_set(e), vs)) ++c;
    return c;
  };
  auto rec = [&](auto&& self, std::size_t from, Subset used, int size) -> void {
    if (size > best && induced_edge_count(used) == size) best = size;
    for (std::size_t i = from; i < edges.size(); ++i) {
      const Subset es = edge_set(edges[i]);
      if (es & used) continue;
      self(self, i + 1, used | es, size + 1);
    }
  };
  rec(rec, 0, 0, 0);
  return best;
}

bool is_forest(const Graph& g) {
  // Union-find: an edge inside one component closes a cycle.
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (auto [u, v] : g.edges()) {
    int ru = find(u), rv = find(v);
    if (ru == rv) return false;
    parent[static_cast<std::size_t>(ru)] = rv;
  }
  return true;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<std::vector<int>> comps;
  for (int v = 1; v <= n; ++v) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    std::vector<int> comp;
    std::deque<int> queue{v};
    seen[static_cast<std::size_t>(v)] = true;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (int w : elements(g.neighbors(u))) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          queue.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

int longest_induced_path_order(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  int best = 1;
  // Extend simple paths one vertex at a time; the new vertex may only see
  // the current endpoint, which keeps the path induced.
  auto rec = [&](auto&& self, int last, Subset on_path, int len) -> void {
    best = std::max(best, len);
    const Subset interior = on_path & ~bit_of(last);
    for (int u : elements(g.neighbors(last) & ~on_path)) {
      if (g.neighbors(u) & interior) continue;
      self(self, u, on_path | bit_of(u), len + 1);
    }
  };
  for (int v = 1; v <= n; ++v) rec(rec, v, bit_of(v), 1);
  return best;
}

std::vector<int> forest_longest_path(const Graph& g) {
  if (!is_forest(g)) throw std::domain_error("forest_longest_path: not a forest");
  const int n = g.vertex_count();
  std::vector<int> dist(static_cast<std::size_t>(n) + 1);
  std::vector<int> prev(static_cast<std::size_t>(n) + 1);
  auto bfs = [&](int src) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(prev.begin(), prev.end(), 0);
    std::deque<int> queue{src};
    dist[static_cast<std::size_t>(src)] = 0;
    int far = src;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      if (dist[static_cast<std::size_t>(u)] > dist[static_cast<std::size_t>(far)] ||
          (dist[static_cast<std::size_t>(u)] == dist[static_cast<std::size_t>(far)] && u < far))
        far = u;
      for (int w : elements(g.neighbors(u))) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          prev[static_cast<std::size_t>(w)] = u;
          queue.push_back(w);
        }
      }
    }
    return far;
  };

  std::vector<int> best;
  for (const auto& comp : connected_components(g)) {
    int a = bfs(comp[0]);
    int b = bfs(a);
    std::vector<int> path;
    for (int x = b; x != 0; x = prev[static_cast<std::size_t>(x)]) path.push_back(x);
    if (path.size() > best.size()) best = std::move(path);
  }
  return best;
}

bool is_distant_leaf(const Graph& g, int v) {
  if (g.degree(v) != 1) return false;
  const int w = min_element(g.neighbors(v));
  int non_leaves = 0;
  for (int u : elements(g.neighbors(w)))
    if (g.degree(u) > 1) ++non_leaves;
  return non_leaves <= 1;
}

DistantEdge find_distant_edge(const Graph& g) {
  if (!is_forest(g)) throw std::domain_error("find_distant_edge: not a forest");
  if (g.edges().empty()) throw std::domain_error("find_distant_edge: no edges");
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (is_distant_leaf(g, v)) return DistantEdge{v, min_element(g.neighbors(v))};
  }
  throw std::domain_error("find_distant_edge: no distant leaf found");
}

std::optional<DistantEdge> find_setup_distant_edge(const Graph& g) {
  if (!is_forest(g)) throw std::domain_error("find_setup_distant_edge: not a forest");
  for (int v = 1; v <= g.vertex_count(); ++v) {
    if (!is_distant_leaf(g, v)) continue;
    const int w = min_element(g.neighbors(v));
    if (g.degree(w) >= 2) return DistantEdge{v, w};
  }
  return std::nullopt;
}

InducedSubgraph induced_subgraph(const Graph& g, Subset a) {
  if (!subset_of(a, full_set(g.vertex_count())))
    throw std::invalid_argument("induced_subgraph: vertex set out of range");
  const auto labels = elements(a);
  std::vector<int> from_old(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (std::size_t i = 0; i < labels.size(); ++i)
    from_old[static_cast<std::size_t>(labels[i])] = static_cast<int>(i) + 1;
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (contains(a, u) && contains(a, v))
      edges.push_back(make_edge(from_old[static_cast<std::size_t>(u)],
                                from_old[static_cast<std::size_t>(v)]));
  InducedSubgraph out;
  out.graph = Graph::from_edges(std::max<int>(1, static_cast<int>(labels.size())), edges);
  out.original_label.assign(1, 0);
  out.original_label.insert(out.original_label.end(), labels.begin(), labels.end());
  return out;
}

Graph induced_subgraph_keep_labels(const Graph& g, Subset a) {
  if (!subset_of(a, full_set(g.vertex_count())))
    throw std::invalid_argument("induced_subgraph: vertex set out of range");
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (contains(a, u) && contains(a, v)) edges.push_back({u, v});
  return Graph::from_edges(g.vertex_count(), edges);
}

}  // namespace sqfpow

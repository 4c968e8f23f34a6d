#ifndef SQFPOW_GRAPH_HPP
#define SQFPOW_GRAPH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sqfpow/subsets.hpp"

namespace sqfpow {

// Unordered edge, stored normalized with first < second.
using Edge = std::pair<int, int>;

constexpr Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

constexpr Subset edge_set(Edge e) { return bit_of(e.first) | bit_of(e.second); }

// Finite simple graph on vertices 1..n. Edges are deduplicated and kept
// sorted; isolated vertices are representable (n may exceed the covered
// vertices). Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Loops and out-of-range endpoints are input errors; duplicate pairs and
  // swapped orientations collapse to one edge.
  static Graph from_edges(int n, const std::vector<Edge>& pairs);

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  Subset neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return popcount(neighbors(v)); }
  bool has_edge(int u, int v) const {
    return u != v && contains(neighbors(u), v);
  }

  // Vertices incident to at least one edge.
  Subset covered_vertices() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Subset> adj_;  // 1-indexed; adj_[0] unused
};

// Standard families. path(1) is a single vertex; cycle requires n >= 3;
// star(n) is the star on n vertices with center 1.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);
Graph make_family(const std::string& kind, int n);

// Seeded random forest: the vertex set is split into components, each filled
// with a uniform random labeled tree decoded from a random Pruefer sequence.
// Deterministic per (n, seed).
Graph random_forest(int n, std::uint64_t seed);

// A set of pairwise vertex-disjoint edges.
struct Matching {
  std::vector<Edge> edges;  // sorted

  int size() const { return static_cast<int>(edges.size()); }
  Subset vertices() const {
    Subset s = 0;
    for (Edge e : edges) s |= edge_set(e);
    return s;
  }
  friend bool operator==(const Matching&, const Matching&) = default;
};

// Visits every k-matching exactly once, in lexicographic order of the sorted
// edge list. The visitor returns false to stop early.
void for_each_k_matching(const Graph& g, int k,
                         const std::function<bool(const Matching&)>& visit);
std::vector<Matching> k_matchings(const Graph& g, int k);

// Visits every non-empty matching (all sizes).
void for_each_matching(const Graph& g,
                       const std::function<bool(const Matching&)>& visit);

int matching_number(const Graph& g);
int induced_matching_number(const Graph& g);

// True iff e and f are disjoint and no edge of g joins an endpoint of e to an
// endpoint of f (an induced 2-matching). Both edges must belong to g.
bool is_gap(const Graph& g, Edge e, Edge f);

bool is_forest(const Graph& g);

// Vertex sets of the connected components, each sorted, ordered by smallest
// vertex. Isolated vertices form singleton components.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Number of vertices of a longest induced path, by exhaustive search.
// Intended for n <= ~16. A single vertex counts as a path of order 1.
int longest_induced_path_order(const Graph& g);

// Longest (ordinary) path in a forest via double sweep; on forests every
// path is induced, so this agrees with the exhaustive search above.
std::vector<int> forest_longest_path(const Graph& g);

// A leaf v whose support w has at most one non-leaf neighbor.
struct DistantEdge {
  int leaf = 0;
  int support = 0;
};

bool is_distant_leaf(const Graph& g, int v);

// Smallest-labeled distant leaf of a forest with at least one edge.
DistantEdge find_distant_edge(const Graph& g);

// Smallest-labeled distant leaf whose support has degree >= 2 (so the
// support has a designated second neighbor). Empty when every component has
// at most 2 vertices.
std::optional<DistantEdge> find_setup_distant_edge(const Graph& g);

// Induced subgraph on A, relabeled 1..|A| order-preservingly;
// original_label[i] recovers the source vertex of new label i (1-indexed).
struct InducedSubgraph {
  Graph graph;
  std::vector<int> original_label;
};
InducedSubgraph induced_subgraph(const Graph& g, Subset a);

// Induced subgraph keeping original labels and the ambient vertex count.
Graph induced_subgraph_keep_labels(const Graph& g, Subset a);

}  // namespace sqfpow

#endif

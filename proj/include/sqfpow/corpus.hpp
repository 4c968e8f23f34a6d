#ifndef SQFPOW_CORPUS_HPP
#define SQFPOW_CORPUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sqfpow/graph.hpp"

namespace sqfpow {

// Canonical form of a forest: per-component center-rooted subtree encodings,
// sorted, plus the count of isolated vertices. Two forests get the same key
// iff they are isomorphic. Trees only (domain error on non-forests).
std::string canonical_forest_key(const Graph& g);

// One labeled representative per isomorphism class of trees on exactly n
// vertices, generated by leaf extension with canonical deduplication.
std::vector<Graph> all_trees(int n);

// One representative per isomorphism class of forests on exactly n vertices
// (isolated vertices count; the edgeless graph is included).
std::vector<Graph> all_forests(int n);

// Forests on 1..n vertices, smaller first.
std::vector<Graph> all_forests_up_to(int n);

// Broom: a path on handle vertices 1..h with bristles extra leaves attached
// to vertex h. broom(h, 0) is the path, broom(1, b) the star on b+1 vertices.
Graph broom_graph(int handle, int bristles);

// Seeded Erdos-Renyi-style random graph, deterministic per (n, seed).
Graph random_graph(int n, double edge_probability, std::uint64_t seed);

}  // namespace sqfpow

#endif

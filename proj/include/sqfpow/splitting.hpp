#ifndef SQFPOW_SPLITTING_HPP
#define SQFPOW_SPLITTING_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sqfpow/betti.hpp"
#include "sqfpow/graph.hpp"
#include "sqfpow/monomial.hpp"

namespace sqfpow {

// A generator partition I = I1 + I2 with G(I) the disjoint union of G(I1)
// and G(I2), together with the precomputed intersection I1 cap I2.
struct Splitting {
  MonomialIdeal whole;
  MonomialIdeal part1;
  MonomialIdeal part2;
  MonomialIdeal intersection;
};

// part2 takes the generators divisible by x_var, part1 the rest.
Splitting x_partition(const MonomialIdeal& ideal, int var);

// Arbitrary generator partition (negative-control harness and tests).
Splitting split_by_predicate(const MonomialIdeal& ideal,
                             const std::function<bool(const SqfMonomial&)>& to_part2);

struct BettiSplitFailure {
  int i = 0, j = 0;
  long long whole = 0, part1 = 0, part2 = 0, intersection = 0;
};

struct BettiSplitVerdict {
  bool holds = false;
  bool degenerate = false;  // one part zero: identity holds trivially
  std::optional<BettiSplitFailure> failure;
};

// Checks beta_{i,j}(I) = beta_{i,j}(I1) + beta_{i,j}(I2) + beta_{i-1,j}(I1 cap I2)
// tablewise; zero parts contribute empty tables.
BettiSplitVerdict verify_betti_splitting(const Splitting& s, const FieldSpec& field);

// (I, x_new)^[k] = I^[k] + x_new I^[k-1] where x_new is a fresh variable
// appended to the ambient of I. Valid for 2 <= k <= monomial_grade(I) + 1.
// The splitting's intersection must (and is checked to) equal x_new * I^[k].
Splitting cone_power_splitting(const MonomialIdeal& ideal, int k);

struct ConeDepthRow {
  int k = 0;
  int lhs = 0;  // g_J(k)
  int rhs = 0;  // min{g_I(k) + d_k - d_{k-1} - 1, g_I(k-1)}, out-of-range g = +inf
  bool ok = false;
};

struct ConeDepthVerdict {
  bool holds = false;
  bool grade_ok = false;  // monomial grade of (I, x_new) equals grade(I) + 1
  std::vector<ConeDepthRow> rows;
};

// For J = (I, x_new): checks g_J(k) = min{g_I(k) + d_k - d_{k-1} - 1, g_I(k-1)}
// for all 1 <= k <= monomial_grade(J), with g_I(0) = g_I(nu+1) = +inf, d_0 = 0.
// g_I is computed in the ambient of I, g_J in the extended ambient.
ConeDepthVerdict verify_cone_depth_formula(const MonomialIdeal& ideal, const FieldSpec& field);

// Recorded relabeling that moves a distant edge {support, leaf} of a forest
// to {n-1, n} with the support's designated second neighbor at n-2, so that
// N(n-1) = {i_1,...,i_t, n-2, n} with every i_j a leaf.
struct SetupLabels {
  Graph relabeled;
  std::vector<int> to_original;    // 1-indexed: new label -> original label
  std::vector<int> from_original;  // 1-indexed: original label -> new label
  int t = 0;
  std::vector<int> leaf_neighbors;  // i_1..i_t in new labels, sorted
};

SetupLabels setup_relabel(const Graph& g, const DistantEdge& edge);

// The distant-edge splitting of I(G)^[k] for a forest G, with every ideal
// identity that comes with it, each verified as an exact equality of
// minimal generating sets:
//   eq_split:        I(G)^[k] = I(G1)^[k] + x_n x_{n-1} I(G2)^[k-1]  (disjointly)
//   eq_intersection: J := I(G1)^[k] cap x_n x_{n-1} I(G2)^[k-1]
//                      = x_n x_{n-1} [ I(G3)^[k] + x_{n-2} I(G3)^[k-1]
//                                      + sum_j x_{i_j} I(G2)^[k-1] ]
//   eq_g1:           I(G1)^[k] = x_{n-1}x_{n-2} I(G3)^[k-1]
//                                + sum_j x_{n-1}x_{i_j} I(G2)^[k-1] + I(G2)^[k]
//   eq_g2_g3:        I(G2)^[k] + x_{n-2} I(G3)^[k-1] = I(G3)^[k] + x_{n-2} I(G3)^[k-1]
//   id_a, id_b, id_c: the three pairwise intersection identities behind them
//   eq_j1_j2:        J1 cap J2 = (x_{i_1},...,x_{i_t}) J1   (only when t > 0)
// G1, G2, G3 are the induced subgraphs on [n-1], [n-2], [n-3] of the
// relabeled forest; all ideals live in the full n-variable ambient.
struct ForestPowerSplitting {
  SetupLabels setup;
  int k = 0;

  MonomialIdeal power;       // I(G)^[k]
  Splitting splitting;       // the x_n-partition above, intersection = J
  MonomialIdeal g1_power;    // I(G1)^[k]
  MonomialIdeal g2_power;    // I(G2)^[k]
  MonomialIdeal g2_power_prev;  // I(G2)^[k-1]
  MonomialIdeal g3_power;    // I(G3)^[k]
  MonomialIdeal g3_power_prev;  // I(G3)^[k-1]
  MonomialIdeal j1, j2;

  bool eq_split = false;
  bool eq_intersection = false;
  bool eq_g1 = false;
  bool eq_g2_g3 = false;
  bool id_a = false, id_b = false, id_c = false;
  bool eq_j1_j2 = false;

  bool all_identities_hold() const {
    return eq_split && eq_intersection && eq_g1 && eq_g2_g3 && id_a && id_b &&
           id_c && (t() == 0 || eq_j1_j2);
  }
  int t() const { return setup.t; }
};

// Locates a setup-compatible distant edge itself (domain error when every
// component has at most 2 vertices or G is not a forest / has no edge).
ForestPowerSplitting forest_power_splitting(const Graph& g, int k);
// Same with a caller-chosen distant edge.
ForestPowerSplitting forest_power_splitting(const Graph& g, int k, const DistantEdge& edge);

// A generator map phi : G(J) -> G(L) whose lcm behavior certifies that the
// inclusion J -> L induces zero maps on Tor.
struct EkMap {
  MonomialIdeal domain;    // J
  MonomialIdeal codomain;  // L
  std::vector<int> image;  // image[d] indexes codomain.gens()
};

// Requires partial_star(J) contained in L (checked; domain error naming a
// violating g / x_i otherwise). For each generator: drop its largest
// variable, then pick the lexicographically smallest generator of L dividing
// the result. The map's correctness is certified by verify_ek_criterion,
// never assumed.
EkMap canonical_ek_map(const MonomialIdeal& j_ideal, const MonomialIdeal& l_ideal);

// The case-split map G(J) -> G(x_n x_{n-1} I(G2)^[k-1]) attached to the
// distant-edge splitting's intersection.
EkMap forest_intersection_ek_map(const ForestPowerSplitting& fps);

struct EkVerdict {
  bool holds = false;
  bool exhaustive = false;
  std::uint64_t subsets_checked = 0;
  std::optional<std::vector<int>> witness;  // generator indices of a violating Omega
};

// Checks, for every non-empty generator subset Omega of J (exhaustively when
// |G(J)| <= exhaustive_limit, otherwise on seeded random subsets), that
// lcm(phi(Omega)) strictly divides lcm(Omega). A sampled pass is reported as
// not falsified (exhaustive = false).
EkVerdict verify_ek_criterion(const EkMap& m, int exhaustive_limit = 16,
                              std::uint64_t seed = 1, std::uint64_t samples = 20000);

}  // namespace sqfpow

#endif

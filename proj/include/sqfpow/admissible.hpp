#ifndef SQFPOW_ADMISSIBLE_HPP
#define SQFPOW_ADMISSIBLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "sqfpow/field.hpp"
#include "sqfpow/graph.hpp"

namespace sqfpow {

// Witness that M is a k-admissible matching: a partition M_1..M_r of M such
// that cross-part edge pairs are gaps, each part's vertex set induces a
// forest, and sum |M_i| <= r + k - 1.
struct AdmissibleCertificate {
  Matching matching;
  std::vector<std::vector<Edge>> parts;
  int k = 0;
};

// sum(a) <= len(a) + k - 1, entries positive.
bool is_k_admissible_sequence(const std::vector<int>& seq, int k);

// Connected components of the "is not a gap" relation on the edges of M.
// Any admissible partition must keep each component inside one part, so the
// component partition is the canonical candidate.
std::vector<std::vector<Edge>> conflict_components(const Graph& g, const Matching& m);

// Polynomial-time admissibility test: take the conflict components as parts;
// M is k-admissible iff sum(|C|-1) <= k-1 and every component's vertex set
// induces a forest. (Merging parts can only hurt both conditions, and the
// gap condition forbids splitting a component.) Cross-validated against the
// brute-force partition search below. Empty matchings are not admissible.
std::optional<AdmissibleCertificate> is_k_admissible_matching(const Graph& g,
                                                              const Matching& m, int k);

// Literal search over every set partition of M. The independent oracle for
// the fast path; |M| <= 10 (domain error beyond).
std::optional<AdmissibleCertificate> brute_force_admissible(const Graph& g,
                                                            const Matching& m, int k);

// k-admissible matching number: the largest size of a k-admissible matching,
// 0 when none exists. Matchings are scanned largest-first so the first hit
// wins. 1 <= k <= matching_number(g) is an input error otherwise.
int aim(const Graph& g, int k);

struct Section4Verdict {
  bool reg_equals_aim_plus_k = false;   // reg(I(G)^[k]) = aim(G,k) + k
  bool aim_step_bound = false;          // aim(G,k) <= aim(G,k-1) + 1
  bool distant_edge_lower_bound = false;  // aim(G \ {w,v}, k-1) + 1 <= aim(G,k)
  bool aim_recursion = false;           // aim(G,k) = max{aim(G1,k), aim(G2,k-1)+1, aim(G3,k)+1}
  bool remark_bounds = false;           // aim >= k, monotone chain, endpoints indm / nu
  std::string detail;

  bool holds() const {
    return reg_equals_aim_plus_k && aim_step_bound && distant_edge_lower_bound &&
           aim_recursion && remark_bounds;
  }
};

// Runs all five statements on a forest for every valid k, regularity from
// the homological oracle.
Section4Verdict verify_section4(const Graph& g, const FieldSpec& field);

}  // namespace sqfpow

#endif

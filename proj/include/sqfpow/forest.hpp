#ifndef SQFPOW_FOREST_HPP
#define SQFPOW_FOREST_HPP

#include <optional>
#include <string>
#include <vector>

#include "sqfpow/betti.hpp"
#include "sqfpow/field.hpp"
#include "sqfpow/graph.hpp"

namespace sqfpow {

// Normalized depth g of I(G)^[k] for a forest G in its full ambient ring,
// by the distant-edge recursion
//   t = 0:  g(G,k) = min{ g(G1,k), g(G2,k-1)-2, g(G3,k-1)-3, g(G3,k)-2 }
//   t > 0:  g(G,k) = min{ g(G1,k), g(G2,k-1)-2-t, g(G3,k-1)-2-t, g(G3,k)-1-t }
// with out-of-range g terms treated as +infinity. Base cases (matching
// number <= 2, or every component having <= 2 vertices) fall back to the
// homological oracle. Memoized on the canonical form of the graph with
// isolated vertices stripped; isolated/ambient-only vertices shift g by one
// each.
int g_forest(const Graph& g, int k);

// Castelnuovo-Mumford regularity of I(G)^[k] for a forest G, by
//   reg(G,k) = max{ reg(G1,k), reg(G2,k-1)+2, reg(G3,k)+1 }
// with out-of-range terms -infinity and reg of the unit ideal (k = 0) taken
// as 0. Same base cases and memoization; reg is ambient-independent.
int reg_forest(const Graph& g, int k);

// Same recursions evaluated with a fresh local cache (no cross-call memo);
// used to check that caching cannot change results.
int g_forest_uncached(const Graph& g, int k);
int reg_forest_uncached(const Graph& g, int k);

void clear_forest_memo();

// ceil(n/3) - k clamped at 0; the closed form of the path's normalized
// depth function. n >= 2 and 1 <= k <= floor(n/2).
int path_g_closed_form(int n, int k);

struct MonotonicityVerdict {
  bool holds = false;
  bool oracle_agrees = false;
  std::vector<int> g_values;  // k = 1..nu
  std::optional<int> failing_k;
};

// g(k+1) <= g(k) across 1..nu(G), recursion values cross-checked against the
// homological oracle.
MonotonicityVerdict check_nonincreasing(const Graph& g,
                                        const FieldSpec& field = FieldSpec::gf(2));

struct InducedPathBoundRow {
  int k = 0;
  int g = 0;
  int bound = 0;
  bool ok = false;
};

struct InducedPathBoundVerdict {
  bool holds = false;
  int ell = 0;               // order of the longest induced path
  bool matching_bound_ok = false;  // nu(G) >= floor(ell/2)
  std::vector<InducedPathBoundRow> rows;
};

// For connected G: nu(G) >= floor(ell/2), and for k <= floor(ell/2) the
// oracle g obeys the two-piece upper bound ceil((3n-2*ell)/3) - k for
// k <= ceil(ell/3), and n - ell beyond.
InducedPathBoundVerdict induced_path_bound(const Graph& g, const FieldSpec& field);

struct CharIndependenceVerdict {
  bool identical = false;
  int failing_k = 0;
  std::string detail;
};

// Betti tables of I(G)^[k] across the listed fields, every k.
CharIndependenceVerdict char_independence(const Graph& g,
                                          const std::vector<FieldSpec>& fields);

struct CycleQuestionRow {
  int n = 0;
  int k = 0;
  int g_path = 0;
  int g_cycle = 0;
};

struct CycleQuestionReport {
  std::vector<CycleQuestionRow> rows;  // n = 3..n_max, k = 1..floor(n/2)
};

// Tabulates g for paths vs cycles via the oracle; exploratory output, no
// assertion (the k >= 2 equality is an open question, the k = 1 values
// differ by at most one).
CycleQuestionReport cycle_question(int n_max, const FieldSpec& field);

struct ProfileRow {
  int k = 0;
  int d_k = 0;
  int depth = 0;
  int g = 0;
  int reg = 0;
  std::optional<int> aim;  // forests only
  std::string source;      // "oracle" | "recursion" | "closed-form"
};

struct ProfileReport {
  int ambient = 0;
  bool forest = false;
  std::vector<ProfileRow> rows;  // k = 1..nu(G)
};

// One row per power: d_k, depth(S/I^[k]), g, reg, aim and aim+k for
// forests. Forests use the recursions (paths the closed form) for g; the
// oracle fills whatever the recursions do not cover.
ProfileReport build_profile(const Graph& g, const FieldSpec& field);

}  // namespace sqfpow

#endif

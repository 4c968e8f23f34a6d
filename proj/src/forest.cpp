#include "sqfpow/forest.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

#include "sqfpow/admissible.hpp"
#include "sqfpow/corpus.hpp"
#include "sqfpow/splitting.hpp"

namespace sqfpow {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

int ceil_div(int a, int b) { return (a + b - 1) / b; }

using MemoMap = std::map<std::pair<std::string, int>, int>;

MemoMap g_shared_memo;
MemoMap reg_shared_memo;
std::mutex memo_mutex;

struct MemoRef {
  MemoMap* map = nullptr;
  bool shared = false;

  std::optional<int> lookup(const std::pair<std::string, int>& key) const {
    if (shared) {
      std::lock_guard<std::mutex> lock(memo_mutex);
      auto it = map->find(key);
      if (it != map->end()) return it->second;
      return std::nullopt;
    }
    auto it = map->find(key);
    if (it != map->end()) return it->second;
    return std::nullopt;
  }

  void store(const std::pair<std::string, int>& key, int value) const {
    if (shared) {
      std::lock_guard<std::mutex> lock(memo_mutex);
      map->emplace(key, value);
    } else {
      map->emplace(key, value);
    }
  }
};

// Whether the distant-edge setup applies: some component has >= 3 vertices.
bool has_setup_edge(const Graph& g) { return find_setup_distant_edge(g).has_value(); }

int g_core(const Graph& g, int k, const MemoRef& memo);
int reg_core(const Graph& g, int k, const MemoRef& memo);

// Strips ambient-only (isolated) vertices before recursing; each stripped
// vertex shifts depth, and hence g, by one. reg is ambient-invariant.
int g_full(const Graph& g, int k, const MemoRef& memo) {
  const Subset covered = g.covered_vertices();
  const int shift = g.vertex_count() - popcount(covered);
  return g_core(induced_subgraph(g, covered).graph, k, memo) + shift;
}

int reg_full(const Graph& g, int k, const MemoRef& memo) {
  return reg_core(induced_subgraph(g, g.covered_vertices()).graph, k, memo);
}

struct SetupParts {
  Graph g1, g2, g3;
  int t = 0;
};

SetupParts setup_parts(const Graph& g) {
  const auto edge = find_setup_distant_edge(g);
  const SetupLabels setup = setup_relabel(g, *edge);
  const int n = setup.relabeled.vertex_count();
  SetupParts parts;
  parts.g1 = induced_subgraph_keep_labels(setup.relabeled, full_set(n - 1));
  parts.g2 = induced_subgraph_keep_labels(setup.relabeled, full_set(n - 2));
  parts.g3 = induced_subgraph_keep_labels(setup.relabeled, full_set(n - 3));
  parts.t = setup.t;
  return parts;
}

// g on a graph without isolated vertices, in its own ambient.
int g_core(const Graph& g, int k, const MemoRef& memo) {
  const std::pair<std::string, int> key{canonical_forest_key(g), k};
  if (auto hit = memo.lookup(key)) return *hit;

  int value;
  if (matching_number(g) <= 2 || !has_setup_edge(g)) {
    value = normalized_depth(edge_ideal(g), k, FieldSpec::gf(2));
  } else {
    const SetupParts parts = setup_parts(g);
    auto term = [&](const Graph& h, int kk, int offset) {
      if (kk < 1 || kk > matching_number(h)) return kInf;
      return g_full(h, kk, memo) - offset;
    };
    // The G3 offsets carry a uniform extra -t from the (x_{i_1},...,x_{i_t})
    // factor of the intersection, so t = 0 degenerates to the J = J1 case.
    // Kept honest by the oracle-equivalence suite.
    const int t = parts.t;
    const int a = term(parts.g1, k, 0);
    const int b = term(parts.g2, k - 1, 2 + t);
    const int c = term(parts.g3, k - 1, 3 + t);
    const int d = term(parts.g3, k, 2 + t);
    value = std::min(std::min(a, b), std::min(c, d));
  }
  memo.store(key, value);
  return value;
}

int reg_core(const Graph& g, int k, const MemoRef& memo) {
  const std::pair<std::string, int> key{canonical_forest_key(g), k};
  if (auto hit = memo.lookup(key)) return *hit;

  int value;
  if (matching_number(g) <= 2 || !has_setup_edge(g)) {
    value = reg_of_power(edge_ideal(g), k, FieldSpec::gf(2));
  } else {
    const SetupParts parts = setup_parts(g);
    // reg of the unit ideal (k = 0) counts as 0 so the scaled term is +2.
    auto term = [&](const Graph& h, int kk, int offset) {
      if (kk == 0) return offset;
      if (kk < 0 || kk > matching_number(h)) return -kInf;
      return reg_full(h, kk, memo) + offset;
    };
    const int a = term(parts.g1, k, 0);
    const int b = term(parts.g2, k - 1, 2);
    const int c = term(parts.g3, k, 1);
    value = std::max(a, std::max(b, c));
  }
  memo.store(key, value);
  return value;
}

void check_forest_power_args(const Graph& g, int k) {
  if (!is_forest(g)) throw std::domain_error("forest recursion requires a forest");
  const int nu = matching_number(g);
  if (k < 1 || k > nu)
    throw std::invalid_argument("power " + std::to_string(k) + " out of range 1.." +
                                std::to_string(nu));
}

}  // namespace

int g_forest(const Graph& g, int k) {
  check_forest_power_args(g, k);
  return g_full(g, k, MemoRef{&g_shared_memo, true});
}

int reg_forest(const Graph& g, int k) {
  check_forest_power_args(g, k);
  return reg_full(g, k, MemoRef{&reg_shared_memo, true});
}

int g_forest_uncached(const Graph& g, int k) {
  check_forest_power_args(g, k);
  MemoMap local;
  return g_full(g, k, MemoRef{&local, false});
}

int reg_forest_uncached(const Graph& g, int k) {
  check_forest_power_args(g, k);
  MemoMap local;
  return reg_full(g, k, MemoRef{&local, false});
}

void clear_forest_memo() {
  std::lock_guard<std::mutex> lock(memo_mutex);
  g_shared_memo.clear();
  reg_shared_memo.clear();
}

int path_g_closed_form(int n, int k) {
  if (n < 2) throw std::invalid_argument("path closed form needs n >= 2");
  if (k < 1 || k > n / 2)
    throw std::invalid_argument("power out of range 1..floor(n/2)");
  return std::max(ceil_div(n, 3) - k, 0);
}

MonotonicityVerdict check_nonincreasing(const Graph& g, const FieldSpec& field) {
  if (!is_forest(g)) throw std::domain_error("check_nonincreasing requires a forest");
  MonotonicityVerdict verdict;
  const int nu = matching_number(g);
  const MonomialIdeal ideal = edge_ideal(g);
  verdict.holds = true;
  verdict.oracle_agrees = true;
  for (int k = 1; k <= nu; ++k) {
    const int value = g_forest(g, k);
    verdict.g_values.push_back(value);
    if (normalized_depth(ideal, k, field) != value) verdict.oracle_agrees = false;
    if (k >= 2 && value > verdict.g_values[static_cast<std::size_t>(k) - 2]) {
      verdict.holds = false;
      if (!verdict.failing_k) verdict.failing_k = k;
    }
  }
  verdict.holds = verdict.holds && verdict.oracle_agrees;
  return verdict;
}

InducedPathBoundVerdict induced_path_bound(const Graph& g, const FieldSpec& field) {
  if (connected_components(g).size() != 1)
    throw std::invalid_argument("induced_path_bound requires a connected graph");
  InducedPathBoundVerdict verdict;
  const int n = g.vertex_count();
  verdict.ell = longest_induced_path_order(g);
  const int nu = matching_number(g);
  verdict.matching_bound_ok = nu >= verdict.ell / 2;
  verdict.holds = verdict.matching_bound_ok;
  const MonomialIdeal ideal = edge_ideal(g);
  for (int k = 1; k <= std::min(verdict.ell / 2, nu); ++k) {
    const int value = normalized_depth(ideal, k, field);
    const int bound = (k <= ceil_div(verdict.ell, 3))
                          ? ceil_div(3 * n - 2 * verdict.ell, 3) - k
                          : n - verdict.ell;
    InducedPathBoundRow row{k, value, bound, value <= bound};
    if (!row.ok) verdict.holds = false;
    verdict.rows.push_back(row);
  }
  return verdict;
}

CharIndependenceVerdict char_independence(const Graph& g,
                                          const std::vector<FieldSpec>& fields) {
  CharIndependenceVerdict verdict;
  verdict.identical = true;
  if (fields.size() < 2) return verdict;
  const MonomialIdeal ideal = edge_ideal(g);
  const int nu = monomial_grade(ideal);
  for (int k = 1; k <= nu && verdict.identical; ++k) {
    const MonomialIdeal power = squarefree_power(ideal, k);
    const BettiTable reference = betti_table(power, fields.front());
    for (std::size_t f = 1; f < fields.size(); ++f) {
      const BettiTable other = betti_table(power, fields[f]);
      if (!reference.same_entries(other)) {
        verdict.identical = false;
        verdict.failing_k = k;
        verdict.detail = "tables differ over " + fields.front().name() + " vs " +
                         fields[f].name() + " at power " + std::to_string(k);
        break;
      }
    }
  }
  return verdict;
}

CycleQuestionReport cycle_question(int n_max, const FieldSpec& field) {
  if (n_max < 3 || n_max > kMaxVertices)
    throw std::invalid_argument("cycle comparison needs 3 <= n <= " +
                                std::to_string(kMaxVertices));
  CycleQuestionReport report;
  for (int n = 3; n <= n_max; ++n) {
    const MonomialIdeal path_ideal = edge_ideal(path_graph(n));
    const MonomialIdeal cycle_ideal = edge_ideal(cycle_graph(n));
    for (int k = 1; k <= n / 2; ++k) {
      report.rows.push_back(CycleQuestionRow{n, k, normalized_depth(path_ideal, k, field),
                                             normalized_depth(cycle_ideal, k, field)});
    }
  }
  return report;
}

namespace {

bool is_path_shape(const Graph& g) {
  if (!is_forest(g) || connected_components(g).size() != 1) return false;
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

}  // namespace

ProfileReport build_profile(const Graph& g, const FieldSpec& field) {
  ProfileReport report;
  report.ambient = g.vertex_count();
  report.forest = is_forest(g);
  const MonomialIdeal ideal = edge_ideal(g);
  const int nu = monomial_grade(ideal);
  const bool path_shape = is_path_shape(g) && g.vertex_count() >= 2;

  for (int k = 1; k <= nu; ++k) {
    ProfileRow row;
    row.k = k;
    row.d_k = initial_degree(squarefree_power(ideal, k));
    if (report.forest) {
      if (path_shape) {
        row.g = path_g_closed_form(g.vertex_count(), k);
        row.source = "closed-form";
      } else {
        row.g = g_forest(g, k);
        row.source = "recursion";
      }
      row.depth = row.g + row.d_k - 1;
      row.reg = reg_forest(g, k);
      row.aim = aim(g, k);
    } else {
      row.depth = depth_of_power(ideal, k, field);
      row.g = row.depth - (row.d_k - 1);
      row.reg = reg_of_power(ideal, k, field);
      row.source = "oracle";
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace sqfpow

#include "sqfpow/splitting.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

namespace sqfpow {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

MonomialIdeal principal(int ambient, Subset support) {
  return MonomialIdeal::minimalize(ambient, std::vector<Subset>{support});
}

// Lexicographic order on sorted index lists ({1,2} < {1,2,3} < {1,3}).
bool lex_less(Subset a, Subset b) {
  while (a && b) {
    const int va = min_element(a), vb = min_element(b);
    if (va != vb) return va < vb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

}  // namespace

Splitting x_partition(const MonomialIdeal& ideal, int var) {
  if (ideal.is_zero()) throw std::invalid_argument("x_partition of the zero ideal");
  if (var < 1 || var > ideal.ambient()) throw std::invalid_argument("variable out of ambient");
  return split_by_predicate(
      ideal, [var](const SqfMonomial& m) { return contains(m.support, var); });
}

Splitting split_by_predicate(const MonomialIdeal& ideal,
                             const std::function<bool(const SqfMonomial&)>& to_part2) {
  std::vector<Subset> g1, g2;
  for (const auto& m : ideal.generators()) (to_part2(m) ? g2 : g1).push_back(m.support);
  Splitting s;
  s.whole = ideal;
  s.part1 = MonomialIdeal::minimalize(ideal.ambient(), std::move(g1));
  s.part2 = MonomialIdeal::minimalize(ideal.ambient(), std::move(g2));
  s.intersection = ideal_intersection(s.part1, s.part2);
  return s;
}

BettiSplitVerdict verify_betti_splitting(const Splitting& s, const FieldSpec& field) {
  BettiSplitVerdict verdict;
  verdict.degenerate = s.part1.is_zero() || s.part2.is_zero();

  const BettiTable empty;
  const BettiTable whole = betti_table(s.whole, field);
  const BettiTable t1 = s.part1.is_zero() ? empty : betti_table(s.part1, field);
  const BettiTable t2 = s.part2.is_zero() ? empty : betti_table(s.part2, field);
  const BettiTable ti =
      s.intersection.is_zero() ? empty : betti_table(s.intersection, field);

  std::set<std::pair<int, int>> cells;
  for (const auto& [ij, v] : whole.entries()) cells.insert(ij);
  for (const auto& [ij, v] : t1.entries()) cells.insert(ij);
  for (const auto& [ij, v] : t2.entries()) cells.insert(ij);
  for (const auto& [ij, v] : ti.entries()) cells.insert({ij.first + 1, ij.second});

  verdict.holds = true;
  for (const auto& [i, j] : cells) {
    const long long lhs = whole.beta(i, j);
    const long long rhs = t1.beta(i, j) + t2.beta(i, j) + ti.beta(i - 1, j);
    if (lhs != rhs) {
      verdict.holds = false;
      verdict.failure = BettiSplitFailure{i, j, lhs, t1.beta(i, j), t2.beta(i, j),
                                          ti.beta(i - 1, j)};
      break;
    }
  }
  return verdict;
}

Splitting cone_power_splitting(const MonomialIdeal& ideal, int k) {
  const int m = ideal.ambient();
  if (m + 1 > kMaxVertices) throw std::invalid_argument("no room for a fresh variable");
  const int nu = monomial_grade(ideal);
  if (k < 2 || k > nu + 1)
    throw std::invalid_argument("cone_power_splitting needs 2 <= k <= grade + 1");

  const int n = m + 1;
  const MonomialIdeal lifted = MonomialIdeal::minimalize(n, ideal.gens());
  const MonomialIdeal cone = ideal_sum(lifted, principal(n, bit_of(n)));
  const SqfMonomial x_new{bit_of(n), n};

  Splitting s;
  s.whole = squarefree_power(cone, k);
  s.part1 = squarefree_power(lifted, k);
  s.part2 = scale(x_new, squarefree_power(lifted, k - 1));
  s.intersection = ideal_intersection(s.part1, s.part2);

  if (ideal_sum(s.part1, s.part2) != s.whole)
    throw std::logic_error("cone power decomposition failed");
  if (s.intersection != scale(x_new, s.part1))
    throw std::logic_error("cone power intersection is not x_new * I^[k]");
  return s;
}

ConeDepthVerdict verify_cone_depth_formula(const MonomialIdeal& ideal, const FieldSpec& field) {
  if (ideal.is_zero()) throw std::invalid_argument("cone depth formula needs a nonzero ideal");
  const int m = ideal.ambient();
  if (m + 1 > kMaxVertices) throw std::invalid_argument("no room for a fresh variable");
  const int n = m + 1;
  const MonomialIdeal lifted = MonomialIdeal::minimalize(n, ideal.gens());
  const MonomialIdeal cone = ideal_sum(lifted, principal(n, bit_of(n)));

  const int nu_i = monomial_grade(ideal);
  const int nu_j = monomial_grade(cone);

  ConeDepthVerdict verdict;
  verdict.grade_ok = (nu_j == nu_i + 1);
  verdict.holds = verdict.grade_ok;

  std::vector<int> d(static_cast<std::size_t>(nu_i) + 1, 0);  // d[0] = 0
  for (int k = 1; k <= nu_i; ++k)
    d[static_cast<std::size_t>(k)] = initial_degree(squarefree_power(ideal, k));

  for (int k = 1; k <= nu_j; ++k) {
    const int lhs = normalized_depth(cone, k, field);
    const int term1 = (k <= nu_i)
                          ? normalized_depth(ideal, k, field) +
                                d[static_cast<std::size_t>(k)] -
                                d[static_cast<std::size_t>(k - 1)] - 1
                          : kInf;
    const int term2 = (k >= 2) ? normalized_depth(ideal, k - 1, field) : kInf;
    const int rhs = std::min(term1, term2);
    ConeDepthRow row{k, lhs, rhs, lhs == rhs};
    if (!row.ok) verdict.holds = false;
    verdict.rows.push_back(row);
  }
  return verdict;
}

SetupLabels setup_relabel(const Graph& g, const DistantEdge& edge) {
  if (!is_forest(g)) throw std::domain_error("setup_relabel: not a forest");
  const int v = edge.leaf, w = edge.support;
  if (!is_distant_leaf(g, v) || !contains(g.neighbors(v), w))
    throw std::invalid_argument("setup_relabel: not a distant edge");
  if (g.degree(w) < 2)
    throw std::domain_error("setup_relabel: support needs a second neighbor");

  // The designated second neighbor is the unique non-leaf neighbor of the
  // support when one exists, otherwise the smallest leaf neighbor.
  int designated = 0;
  std::vector<int> leaf_nb;
  for (int u : elements(g.neighbors(w) & ~bit_of(v))) {
    if (g.degree(u) > 1) {
      if (designated != 0) throw std::logic_error("two non-leaf neighbors at a distant edge");
      designated = u;
    } else {
      leaf_nb.push_back(u);
    }
  }
  if (designated == 0) {
    designated = leaf_nb.front();
    leaf_nb.erase(leaf_nb.begin());
  }

  const int n = g.vertex_count();
  SetupLabels out;
  out.from_original.assign(static_cast<std::size_t>(n) + 1, 0);
  out.to_original.assign(static_cast<std::size_t>(n) + 1, 0);
  out.from_original[static_cast<std::size_t>(v)] = n;
  out.from_original[static_cast<std::size_t>(w)] = n - 1;
  out.from_original[static_cast<std::size_t>(designated)] = n - 2;
  int next = 1;
  for (int u = 1; u <= n; ++u) {
    if (u == v || u == w || u == designated) continue;
    out.from_original[static_cast<std::size_t>(u)] = next++;
  }
  for (int u = 1; u <= n; ++u)
    out.to_original[static_cast<std::size_t>(out.from_original[static_cast<std::size_t>(u)])] = u;

  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (auto [a, b] : g.edges())
    edges.push_back(make_edge(out.from_original[static_cast<std::size_t>(a)],
                              out.from_original[static_cast<std::size_t>(b)]));
  out.relabeled = Graph::from_edges(n, edges);

  out.t = static_cast<int>(leaf_nb.size());
  for (int u : leaf_nb)
    out.leaf_neighbors.push_back(out.from_original[static_cast<std::size_t>(u)]);
  std::sort(out.leaf_neighbors.begin(), out.leaf_neighbors.end());
  return out;
}

ForestPowerSplitting forest_power_splitting(const Graph& g, int k) {
  if (!is_forest(g)) throw std::domain_error("forest_power_splitting: not a forest");
  const auto edge = find_setup_distant_edge(g);
  if (!edge)
    throw std::domain_error(
        "forest_power_splitting: every component has <= 2 vertices; use the oracle directly");
  return forest_power_splitting(g, k, *edge);
}

ForestPowerSplitting forest_power_splitting(const Graph& g, int k, const DistantEdge& edge) {
  const int nu = matching_number(g);
  if (nu < 3)
    throw std::domain_error("forest_power_splitting: matching number < 3; use the oracle directly");
  if (k < 1 || k > nu) throw std::invalid_argument("power out of range 1..matching number");

  ForestPowerSplitting fps;
  fps.setup = setup_relabel(g, edge);
  fps.k = k;

  const Graph& rg = fps.setup.relabeled;
  const int n = rg.vertex_count();
  const Graph g1 = induced_subgraph_keep_labels(rg, full_set(n - 1));
  const Graph g2 = induced_subgraph_keep_labels(rg, full_set(n - 2));
  const Graph g3 = induced_subgraph_keep_labels(rg, full_set(n - 3));

  const SqfMonomial x_n1{bit_of(n - 1), n};
  const SqfMonomial x_n2{bit_of(n - 2), n};
  const SqfMonomial x_n_n1{bit_of(n) | bit_of(n - 1), n};
  const SqfMonomial x_n1_n2{bit_of(n - 1) | bit_of(n - 2), n};
  const SqfMonomial x_n_n1_n2{bit_of(n) | bit_of(n - 1) | bit_of(n - 2), n};

  fps.power = squarefree_power(edge_ideal(rg), k);
  fps.g1_power = squarefree_power(edge_ideal(g1), k);
  fps.g2_power = squarefree_power(edge_ideal(g2), k);
  fps.g2_power_prev = squarefree_power(edge_ideal(g2), k - 1);
  fps.g3_power = squarefree_power(edge_ideal(g3), k);
  fps.g3_power_prev = squarefree_power(edge_ideal(g3), k - 1);

  const MonomialIdeal part2 = scale(x_n_n1, fps.g2_power_prev);

  // I(G)^[k] = I(G1)^[k] + x_n x_{n-1} I(G2)^[k-1], disjointly on generators.
  const Splitting xp = x_partition(fps.power, n);
  fps.eq_split = (xp.part1 == fps.g1_power) && (xp.part2 == part2);

  fps.splitting.whole = fps.power;
  fps.splitting.part1 = fps.g1_power;
  fps.splitting.part2 = part2;
  fps.splitting.intersection = ideal_intersection(fps.g1_power, part2);

  const auto& ij = fps.setup.leaf_neighbors;

  // J = x_n x_{n-1} [ I(G3)^[k] + x_{n-2} I(G3)^[k-1] + sum_j x_{i_j} I(G2)^[k-1] ]
  MonomialIdeal inner = ideal_sum(fps.g3_power, scale(x_n2, fps.g3_power_prev));
  fps.j1 = scale(x_n_n1, inner);
  fps.j2 = scale(x_n_n1, variable_multiple(ij, fps.g2_power_prev));
  inner = ideal_sum(inner, variable_multiple(ij, fps.g2_power_prev));
  const MonomialIdeal j_expected = scale(x_n_n1, inner);
  fps.eq_intersection = (fps.splitting.intersection == j_expected) &&
                        (fps.splitting.intersection == ideal_sum(fps.j1, fps.j2));

  // I(G1)^[k] = x_{n-1}x_{n-2} I(G3)^[k-1] + sum_j x_{n-1}x_{i_j} I(G2)^[k-1] + I(G2)^[k]
  const MonomialIdeal g1_expected =
      ideal_sum(ideal_sum(scale(x_n1_n2, fps.g3_power_prev),
                          scale(x_n1, variable_multiple(ij, fps.g2_power_prev))),
                fps.g2_power);
  fps.eq_g1 = (fps.g1_power == g1_expected);

  // I(G2)^[k] + x_{n-2} I(G3)^[k-1] = I(G3)^[k] + x_{n-2} I(G3)^[k-1]
  const MonomialIdeal shared = scale(x_n2, fps.g3_power_prev);
  fps.eq_g2_g3 = (ideal_sum(fps.g2_power, shared) == ideal_sum(fps.g3_power, shared));

  // (a)  x_{n-1}x_{n-2}I(G3)^[k-1] cap x_{n-1}x_n I(G2)^[k-1] = x_n x_{n-1}x_{n-2} I(G3)^[k-1]
  fps.id_a = ideal_intersection(scale(x_n1_n2, fps.g3_power_prev), part2) ==
             scale(x_n_n1_n2, fps.g3_power_prev);

  // (b)  per leaf neighbor i_j
  fps.id_b = true;
  for (int i : ij) {
    const SqfMonomial left{bit_of(i) | bit_of(n - 1), n};
    const SqfMonomial both{bit_of(i) | bit_of(n - 1) | bit_of(n), n};
    if (ideal_intersection(scale(left, fps.g2_power_prev), part2) !=
        scale(both, fps.g2_power_prev)) {
      fps.id_b = false;
      break;
    }
  }

  // (c)  I(G2)^[k] cap x_{n-1}x_n I(G2)^[k-1] = x_n x_{n-1} I(G2)^[k]
  fps.id_c = ideal_intersection(fps.g2_power, part2) == scale(x_n_n1, fps.g2_power);

  // J1 cap J2 = (x_{i_1},...,x_{i_t}) J1, only meaningful when t > 0
  if (fps.t() > 0) {
    fps.eq_j1_j2 = ideal_intersection(fps.j1, fps.j2) == variable_multiple(ij, fps.j1);
  }
  return fps;
}

EkMap canonical_ek_map(const MonomialIdeal& j_ideal, const MonomialIdeal& l_ideal) {
  if (j_ideal.ambient() != l_ideal.ambient()) throw std::invalid_argument("ambient mismatch");
  if (j_ideal.is_zero() || l_ideal.is_zero())
    throw std::invalid_argument("canonical_ek_map needs nonzero ideals");

  // The construction needs g / x_max inside L for every generator (full
  // partial_star containment is sufficient but not required; the exhaustive
  // criterion check is the arbiter of correctness either way).
  for (const auto& gen : j_ideal.generators()) {
    if (gen.is_one()) throw std::domain_error("canonical_ek_map: 1 is a generator");
    const int v = max_element(gen.support);
    const SqfMonomial quotient{gen.support & ~bit_of(v), gen.ambient};
    if (!l_ideal.contains(quotient))
      throw std::domain_error("canonical_ek_map: " + gen.str() + "/x" + std::to_string(v) +
                              " is not in the codomain ideal");
  }

  EkMap map;
  map.domain = j_ideal;
  map.codomain = l_ideal;
  const auto& codomain_gens = l_ideal.gens();
  for (Subset gen : j_ideal.gens()) {
    const Subset trimmed = gen & ~bit_of(max_element(gen));
    int best = -1;
    for (std::size_t c = 0; c < codomain_gens.size(); ++c) {
      if (!subset_of(codomain_gens[c], trimmed)) continue;
      if (best < 0 || lex_less(codomain_gens[c], codomain_gens[static_cast<std::size_t>(best)]))
        best = static_cast<int>(c);
    }
    if (best < 0) throw std::logic_error("no codomain generator divides the trimmed generator");
    if (!(subset_of(codomain_gens[static_cast<std::size_t>(best)], gen) &&
          codomain_gens[static_cast<std::size_t>(best)] != gen))
      throw std::logic_error("canonical map image does not strictly divide its source");
    map.image.push_back(best);
  }
  return map;
}

EkMap forest_intersection_ek_map(const ForestPowerSplitting& fps) {
  const MonomialIdeal& j = fps.splitting.intersection;
  const MonomialIdeal& codomain = fps.splitting.part2;
  if (j.is_zero()) throw std::invalid_argument("intersection is zero, no map to build");

  const int n = fps.setup.relabeled.vertex_count();
  const Subset pair_mask = bit_of(n) | bit_of(n - 1);

  std::optional<EkMap> g3_step;
  if (!fps.g3_power.is_zero())
    g3_step = canonical_ek_map(fps.g3_power, fps.g3_power_prev);

  auto codomain_index = [&codomain](Subset target) {
    const auto& gens = codomain.gens();
    for (std::size_t c = 0; c < gens.size(); ++c)
      if (gens[c] == target) return static_cast<int>(c);
    throw std::logic_error("image is not a generator of the codomain");
  };

  EkMap map;
  map.domain = j;
  map.codomain = codomain;
  for (Subset gen : j.gens()) {
    if (!subset_of(pair_mask, gen))
      throw std::logic_error("intersection generator misses the distant edge variables");
    const Subset core = gen & ~pair_mask;
    Subset image = 0;
    bool assigned = false;

    // (i) core is a generator of I(G3)^[k]: step it down with the canonical map.
    if (g3_step) {
      const auto& from = fps.g3_power.gens();
      const auto it = std::find(from.begin(), from.end(), core);
      if (it != from.end()) {
        const auto idx = static_cast<std::size_t>(it - from.begin());
        image = pair_mask |
                fps.g3_power_prev.gens()[static_cast<std::size_t>(g3_step->image[idx])];
        assigned = true;
      }
    }
    // (ii) core = x_{n-2} * (generator of I(G3)^[k-1]): drop x_{n-2}.
    if (!assigned && contains(core, n - 2)) {
      const Subset rest = core & ~bit_of(n - 2);
      const auto& from = fps.g3_power_prev.gens();
      if (std::find(from.begin(), from.end(), rest) != from.end()) {
        image = pair_mask | rest;
        assigned = true;
      }
    }
    // (iii) core = x_{i_j} * (generator of I(G2)^[k-1]): drop the smallest such x_{i_j}.
    if (!assigned) {
      for (int i : fps.setup.leaf_neighbors) {
        if (!contains(core, i)) continue;
        const Subset rest = core & ~bit_of(i);
        const auto& from = fps.g2_power_prev.gens();
        if (std::find(from.begin(), from.end(), rest) != from.end()) {
          image = pair_mask | rest;
          assigned = true;
          break;
        }
      }
    }
    if (!assigned)
      throw std::logic_error("intersection generator matches no case of the splitting map");
    map.image.push_back(codomain_index(image));
  }
  return map;
}

EkVerdict verify_ek_criterion(const EkMap& m, int exhaustive_limit, std::uint64_t seed,
                              std::uint64_t samples) {
  const auto& dom = m.domain.gens();
  std::vector<Subset> img;
  img.reserve(m.image.size());
  for (int idx : m.image) img.push_back(m.codomain.gens()[static_cast<std::size_t>(idx)]);
  if (dom.size() != img.size()) throw std::invalid_argument("map does not cover the domain");

  EkVerdict verdict;
  auto strict = [](Subset lcm_phi, Subset lcm_omega) {
    return subset_of(lcm_phi, lcm_omega) && lcm_phi != lcm_omega;
  };

  const int count = static_cast<int>(dom.size());
  if (count <= exhaustive_limit) {
    verdict.exhaustive = true;
    std::vector<int> chosen;
    bool failed = false;
    auto rec = [&](auto&& self, int at, Subset lcm_omega, Subset lcm_phi) -> void {
      if (failed) return;
      if (at == count) {
        if (!chosen.empty()) {
          ++verdict.subsets_checked;
          if (!strict(lcm_phi, lcm_omega)) {
            failed = true;
            verdict.witness = chosen;
          }
        }
        return;
      }
      self(self, at + 1, lcm_omega, lcm_phi);
      if (failed) return;
      chosen.push_back(at);
      self(self, at + 1, lcm_omega | dom[static_cast<std::size_t>(at)],
           lcm_phi | img[static_cast<std::size_t>(at)]);
      chosen.pop_back();
    };
    rec(rec, 0, 0, 0);
    verdict.holds = !failed;
    return verdict;
  }

  std::mt19937_64 rng(seed);
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::vector<int> chosen;
    Subset lcm_omega = 0, lcm_phi = 0;
    for (int i = 0; i < count; ++i) {
      if (rng() & 1) {
        chosen.push_back(i);
        lcm_omega |= dom[static_cast<std::size_t>(i)];
        lcm_phi |= img[static_cast<std::size_t>(i)];
      }
    }
    if (chosen.empty()) continue;
    ++verdict.subsets_checked;
    if (!strict(lcm_phi, lcm_omega)) {
      verdict.holds = false;
      verdict.witness = std::move(chosen);
      return verdict;
    }
  }
  verdict.holds = true;  // not falsified
  return verdict;
}

}  // namespace sqfpow

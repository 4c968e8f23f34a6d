#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "sqfpow/betti.hpp"
#include "sqfpow/corpus.hpp"
#include "sqfpow/forest.hpp"

using namespace sqfpow;

namespace {

const FieldSpec gf2 = FieldSpec::gf(2);

const Graph example11 = Graph::from_edges(
    11, {{1, 2}, {2, 3}, {3, 4}, {3, 9}, {9, 10}, {10, 5}, {10, 6}, {10, 7}, {10, 8}, {10, 11}});

// Exhaustive labeled enumeration with canonical deduplication: the
// independent route for the generator-based corpus counts.
int count_forest_classes_exhaustively(int n) {
  std::vector<Edge> all_edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) all_edges.push_back({u, v});
  std::set<std::string> keys;
  const std::size_t total = std::size_t{1} << all_edges.size();
  for (std::size_t mask = 0; mask < total; ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < all_edges.size(); ++i)
      if (mask & (std::size_t{1} << i)) edges.push_back(all_edges[i]);
    const Graph g = Graph::from_edges(n, edges);
    if (!is_forest(g)) continue;
    keys.insert(canonical_forest_key(g));
  }
  return static_cast<int>(keys.size());
}

}  // namespace

TEST_CASE("tree and forest corpora are complete and duplicate-free") {
  for (int n = 1; n <= 6; ++n) {
    const auto forests = all_forests(n);
    std::set<std::string> keys;
    for (const Graph& g : forests) {
      CHECK(is_forest(g));
      CHECK(g.vertex_count() == n);
      keys.insert(canonical_forest_key(g));
    }
    CHECK(static_cast<int>(keys.size()) == static_cast<int>(forests.size()));
    CHECK(static_cast<int>(forests.size()) == count_forest_classes_exhaustively(n));
  }
  // trees only: one representative per class, paths and stars included
  const auto trees7 = all_trees(7);
  std::set<std::string> keys;
  for (const Graph& t : trees7) {
    CHECK(is_forest(t));
    CHECK(connected_components(t).size() == 1);
    keys.insert(canonical_forest_key(t));
  }
  CHECK(keys.size() == trees7.size());
  CHECK(keys.count(canonical_forest_key(path_graph(7))) == 1);
  CHECK(keys.count(canonical_forest_key(star_graph(7))) == 1);
}

TEST_CASE("canonical keys identify isomorphic forests") {
  const Graph relabeled = Graph::from_edges(5, {{5, 4}, {4, 3}, {3, 2}, {2, 1}});
  CHECK(canonical_forest_key(relabeled) == canonical_forest_key(path_graph(5)));
  CHECK(canonical_forest_key(star_graph(4)) != canonical_forest_key(path_graph(4)));
  const Graph with_isolated = Graph::from_edges(5, {{1, 2}, {2, 3}});
  CHECK(canonical_forest_key(with_isolated) != canonical_forest_key(path_graph(3)));
  CHECK_THROWS_AS(canonical_forest_key(cycle_graph(4)), std::domain_error);

  // invariance under arbitrary relabelings
  std::mt19937_64 rng(31);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = random_forest(9, seed);
    std::vector<int> perm(10);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    std::vector<Edge> shuffled;
    for (auto [u, v] : g.edges())
      shuffled.push_back(make_edge(perm[static_cast<std::size_t>(u)],
                                   perm[static_cast<std::size_t>(v)]));
    CHECK(canonical_forest_key(Graph::from_edges(9, shuffled)) == canonical_forest_key(g));
  }
}

TEST_CASE("broom family") {
  CHECK(broom_graph(5, 0) == path_graph(5));
  CHECK(broom_graph(1, 4) == star_graph(5));
  const Graph b = broom_graph(3, 2);
  CHECK(b.vertex_count() == 5);
  CHECK(b.edges() == std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}, {3, 5}});
}

TEST_CASE("path closed form") {
  CHECK(path_g_closed_form(7, 1) == 2);
  CHECK(path_g_closed_form(7, 3) == 0);
  CHECK(path_g_closed_form(6, 2) == 0);
  CHECK(path_g_closed_form(3, 1) == 0);
  CHECK_THROWS_AS(path_g_closed_form(4, 3), std::invalid_argument);
  CHECK_THROWS_AS(path_g_closed_form(1, 1), std::invalid_argument);
}

TEST_CASE("g recursion on the 11-vertex example") {
  CHECK(g_forest(example11, 1) == 2);
  CHECK(g_forest(example11, 2) == 1);
  CHECK(g_forest(example11, 3) == 0);
}

TEST_CASE("g recursion on paths and matchings") {
  CHECK(g_forest(path_graph(9), 1) == 2);
  CHECK(g_forest(path_graph(9), 2) == 1);
  CHECK(g_forest(path_graph(9), 3) == 0);

  const Graph perfect = Graph::from_edges(6, {{1, 2}, {3, 4}, {5, 6}});
  for (int k = 1; k <= 3; ++k) CHECK(g_forest(perfect, k) == 3 - k);

  CHECK_THROWS_AS(g_forest(path_graph(6), 0), std::invalid_argument);
  CHECK_THROWS_AS(g_forest(path_graph(6), 4), std::invalid_argument);
  CHECK_THROWS_AS(g_forest(cycle_graph(4), 1), std::domain_error);
}

TEST_CASE("recursions agree with the oracle on the small corpus") {
  for (const Graph& g : all_forests_up_to(8)) {
    if (g.edge_count() == 0) continue;
    const MonomialIdeal ideal = edge_ideal(g);
    const int nu = matching_number(g);
    for (int k = 1; k <= nu; ++k) {
      CHECK(g_forest(g, k) == normalized_depth(ideal, k, gf2));
      CHECK(reg_forest(g, k) == reg_of_power(ideal, k, gf2));
    }
  }
}

TEST_CASE("reg recursion endpoints") {
  for (const Graph& g : all_forests_up_to(7)) {
    if (g.edge_count() == 0) continue;
    const int nu = matching_number(g);
    CHECK(reg_forest(g, 1) == induced_matching_number(g) + 1);
    CHECK(reg_forest(g, nu) == 2 * nu);
  }
  CHECK(reg_forest(example11, 2) == reg_of_power(edge_ideal(example11), 2, gf2));
}

TEST_CASE("the shared memo is safe under concurrent use") {
  clear_forest_memo();
  std::vector<Graph> corpus;
  for (std::uint64_t seed = 40; seed < 52; ++seed) corpus.push_back(random_forest(9, seed));
  // reference values from fresh local caches
  std::vector<std::vector<int>> expected;
  for (const Graph& g : corpus) {
    std::vector<int> row;
    for (int k = 1; k <= matching_number(g); ++k) {
      row.push_back(g_forest_uncached(g, k));
      row.push_back(reg_forest_uncached(g, k));
    }
    expected.push_back(std::move(row));
  }
  std::vector<std::vector<std::vector<int>>> results(4);
  std::vector<std::thread> workers;
  for (auto& slot : results) {
    workers.emplace_back([&corpus, &slot] {
      for (const Graph& g : corpus) {
        std::vector<int> row;
        for (int k = 1; k <= matching_number(g); ++k) {
          row.push_back(g_forest(g, k));
          row.push_back(reg_forest(g, k));
        }
        slot.push_back(std::move(row));
      }
    });
  }
  for (auto& w : workers) w.join();
  for (const auto& slot : results) CHECK(slot == expected);
}

TEST_CASE("memoized and fresh-cache recursions agree") {
  clear_forest_memo();
  std::vector<Graph> corpus = {example11, path_graph(9), random_forest(9, 4),
                               random_forest(8, 9)};
  for (const Graph& g : corpus) {
    for (int k = 1; k <= matching_number(g); ++k) {
      const int cached = g_forest(g, k);
      CHECK(cached == g_forest_uncached(g, k));
      CHECK(cached == g_forest(g, k));  // warm second call
      CHECK(reg_forest(g, k) == reg_forest_uncached(g, k));
    }
  }
}

TEST_CASE("g is non-increasing across the corpus") {
  const MonotonicityVerdict p10 = check_nonincreasing(path_graph(10));
  CHECK(p10.holds);
  CHECK(p10.oracle_agrees);
  CHECK(p10.g_values == std::vector<int>{3, 2, 1, 0, 0});

  const MonotonicityVerdict ex = check_nonincreasing(example11);
  CHECK(ex.holds);
  CHECK(ex.g_values == std::vector<int>{2, 1, 0});

  // single power: vacuously non-increasing
  const MonotonicityVerdict star = check_nonincreasing(star_graph(5));
  CHECK(star.holds);
  CHECK(star.g_values.size() == 1);

  CHECK_THROWS_AS(check_nonincreasing(cycle_graph(5)), std::domain_error);
}

TEST_CASE("induced path bound") {
  const InducedPathBoundVerdict c6 = induced_path_bound(cycle_graph(6), gf2);
  CHECK(c6.ell == 5);
  CHECK(c6.matching_bound_ok);
  CHECK(c6.holds);
  REQUIRE(c6.rows.size() == 2);

  // paths: the bound is tight
  for (int n = 4; n <= 9; ++n) {
    const InducedPathBoundVerdict v = induced_path_bound(path_graph(n), gf2);
    CHECK(v.ell == n);
    CHECK(v.holds);
    for (const auto& row : v.rows) CHECK(row.g == row.bound);
  }

  const InducedPathBoundVerdict claw = induced_path_bound(star_graph(4), gf2);
  CHECK(claw.ell == 3);
  CHECK(claw.holds);

  CHECK_THROWS_AS(induced_path_bound(Graph::from_edges(4, {{1, 2}}), gf2),
                  std::invalid_argument);
}

TEST_CASE("characteristic independence for forests") {
  const std::vector<FieldSpec> fields{gf2, FieldSpec::gf(3), FieldSpec::rationals()};
  CHECK(char_independence(path_graph(8), fields).identical);
  CHECK(char_independence(example11, fields).identical);
  // non-forest control: a verdict is produced either way
  const CharIndependenceVerdict c5 = char_independence(cycle_graph(5), fields);
  const CharIndependenceVerdict again = char_independence(cycle_graph(5), fields);
  CHECK(c5.identical == again.identical);
}

TEST_CASE("cycle comparison report") {
  const CycleQuestionReport report = cycle_question(6, gf2);
  // rows for n = 3..6, k = 1..floor(n/2)
  std::size_t expected = 0;
  for (int n = 3; n <= 6; ++n) expected += static_cast<std::size_t>(n / 2);
  CHECK(report.rows.size() == expected);
  for (const auto& row : report.rows) {
    CHECK(row.g_path == path_g_closed_form(row.n, row.k));
    if (row.k == 1) CHECK(std::abs(row.g_path - row.g_cycle) <= 1);
  }
  // g(P4, 2) = 0 is recorded
  bool found = false;
  for (const auto& row : report.rows)
    if (row.n == 4 && row.k == 2) {
      found = true;
      CHECK(row.g_path == 0);
    }
  CHECK(found);
  CHECK_THROWS_AS(cycle_question(64, gf2), std::invalid_argument);
}

TEST_CASE("profile report") {
  const ProfileReport p7 = build_profile(path_graph(7), gf2);
  CHECK(p7.forest);
  REQUIRE(p7.rows.size() == 3);
  CHECK(p7.rows[0].g == 2);
  CHECK(p7.rows[1].g == 1);
  CHECK(p7.rows[2].g == 0);
  CHECK(p7.rows[0].source == "closed-form");
  for (const auto& row : p7.rows) {
    CHECK(row.d_k == 2 * row.k);
    CHECK(row.depth == row.g + row.d_k - 1);
    REQUIRE(row.aim.has_value());
    CHECK(*row.aim + row.k == row.reg);
  }

  const ProfileReport ex = build_profile(example11, gf2);
  CHECK(ex.rows[1].g == 1);
  CHECK(ex.rows[1].source == "recursion");

  const ProfileReport c3 = build_profile(cycle_graph(3), FieldSpec::rationals());
  CHECK_FALSE(c3.forest);
  REQUIRE(c3.rows.size() == 1);
  CHECK(c3.rows[0].source == "oracle");
  CHECK_FALSE(c3.rows[0].aim.has_value());
}

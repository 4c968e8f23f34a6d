#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sqfpow/admissible.hpp"
#include "sqfpow/betti.hpp"
#include "sqfpow/corpus.hpp"

using namespace sqfpow;

namespace {

const FieldSpec gf2 = FieldSpec::gf(2);

const Graph example11 = Graph::from_edges(
    11, {{1, 2}, {2, 3}, {3, 4}, {3, 9}, {9, 10}, {10, 5}, {10, 6}, {10, 7}, {10, 8}, {10, 11}});

bool same_verdict(const Graph& g, const Matching& m, int k) {
  return is_k_admissible_matching(g, m, k).has_value() ==
         brute_force_admissible(g, m, k).has_value();
}

void cross_validate(const Graph& g, int k_max) {
  for_each_matching(g, [&](const Matching& m) {
    for (int k = 1; k <= k_max; ++k) CHECK(same_verdict(g, m, k));
    return true;
  });
}

}  // namespace

TEST_CASE("admissible sequences") {
  CHECK(is_k_admissible_sequence({1, 1, 1}, 1));
  CHECK_FALSE(is_k_admissible_sequence({2, 2}, 2));
  CHECK(is_k_admissible_sequence({3}, 3));
  CHECK_THROWS_AS(is_k_admissible_sequence({0, 1}, 1), std::invalid_argument);
}

TEST_CASE("conflict components") {
  const Graph p6 = path_graph(6);
  const auto one = conflict_components(p6, Matching{{{1, 2}, {3, 4}, {5, 6}}});
  REQUIRE(one.size() == 1);
  CHECK(one[0].size() == 3);

  const auto two = conflict_components(path_graph(5), Matching{{{1, 2}, {4, 5}}});
  REQUIRE(two.size() == 2);
  CHECK(two[0] == std::vector<Edge>{{1, 2}});
  CHECK(two[1] == std::vector<Edge>{{4, 5}});

  const auto singleton = conflict_components(p6, Matching{{{3, 4}}});
  CHECK(singleton.size() == 1);

  CHECK_THROWS_AS(conflict_components(p6, Matching{{{1, 3}}}), std::invalid_argument);
  CHECK_THROWS_AS(conflict_components(p6, Matching{{{1, 2}, {2, 3}}}), std::invalid_argument);
}

TEST_CASE("fast-path admissibility") {
  const Graph p6 = path_graph(6);
  const Matching full{{{1, 2}, {3, 4}, {5, 6}}};
  CHECK_FALSE(is_k_admissible_matching(p6, full, 2).has_value());

  const auto cert = is_k_admissible_matching(p6, full, 3);
  REQUIRE(cert.has_value());
  CHECK(cert->parts.size() == 1);
  CHECK(cert->k == 3);

  const auto single = is_k_admissible_matching(p6, Matching{{{1, 2}}}, 1);
  REQUIRE(single.has_value());
  CHECK(single->parts.size() == 1);

  CHECK_FALSE(is_k_admissible_matching(p6, Matching{}, 1).has_value());
}

TEST_CASE("brute force partition search") {
  // C4: the two disjoint edges are not a gap and their union induces the
  // cycle, so no partition works for any k
  const Graph c4 = cycle_graph(4);
  const Matching m{{{1, 2}, {3, 4}}};
  CHECK_FALSE(brute_force_admissible(c4, m, 2).has_value());
  CHECK_FALSE(is_k_admissible_matching(c4, m, 2).has_value());

  CHECK_FALSE(brute_force_admissible(c4, Matching{}, 1).has_value());

  Matching big;
  const Graph wide = Graph::from_edges(22, [] {
    std::vector<Edge> e;
    for (int i = 0; i < 11; ++i) e.push_back({2 * i + 1, 2 * i + 2});
    return e;
  }());
  for (int i = 0; i < 11; ++i) big.edges.push_back({2 * i + 1, 2 * i + 2});
  CHECK_THROWS_AS(brute_force_admissible(wide, big, 1), std::domain_error);
}

TEST_CASE("fast path agrees with brute force") {
  // exhaustive labeled graphs on up to 4 vertices
  for (int n = 2; n <= 4; ++n) {
    std::vector<Edge> all_edges;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) all_edges.push_back({u, v});
    for (std::size_t mask = 0; mask < (std::size_t{1} << all_edges.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < all_edges.size(); ++i)
        if (mask & (std::size_t{1} << i)) edges.push_back(all_edges[i]);
      cross_validate(Graph::from_edges(n, edges), 4);
    }
  }
  // families and random graphs beyond
  cross_validate(cycle_graph(5), 3);
  cross_validate(cycle_graph(6), 3);
  cross_validate(star_graph(6), 2);
  cross_validate(example11, 3);
  for (std::uint64_t seed = 1; seed <= 8; ++seed)
    cross_validate(random_graph(7, 0.45, seed), 3);
}

TEST_CASE("aim values") {
  for (const Graph& g : {path_graph(6), path_graph(7), star_graph(5), example11}) {
    CHECK(aim(g, 1) == induced_matching_number(g));
    const int nu = matching_number(g);
    CHECK(aim(g, nu) == nu);
  }

  const Graph perfect = Graph::from_edges(6, {{1, 2}, {3, 4}, {5, 6}});
  for (int k = 1; k <= 3; ++k) CHECK(aim(perfect, k) == 3);

  CHECK_THROWS_AS(aim(path_graph(6), 4), std::invalid_argument);
  CHECK_THROWS_AS(aim(path_graph(6), 0), std::invalid_argument);
}

TEST_CASE("aim is monotone in k and under induced subgraphs") {
  for (const Graph& g : {path_graph(8), example11, random_forest(8, 17)}) {
    const int nu = matching_number(g);
    for (int k = 2; k <= nu; ++k) CHECK(aim(g, k - 1) <= aim(g, k));
    for (int k = 1; k <= nu; ++k) CHECK(aim(g, k) >= k);
    // dropping a vertex can only shrink aim
    const Graph h = induced_subgraph_keep_labels(g, full_set(g.vertex_count()) & ~bit_of(1));
    const int nu_h = matching_number(h);
    for (int k = 1; k <= std::min(nu, nu_h); ++k) CHECK(aim(h, k) <= aim(g, k));
  }
}

TEST_CASE("condition (e) never rejects on forests") {
  for (const Graph& g : all_forests_up_to(7)) {
    for_each_matching(g, [&](const Matching& m) {
      const auto comps = conflict_components(g, m);
      const int excess = m.size() - static_cast<int>(comps.size());
      for (int k = 1; k <= 4; ++k) {
        // on forests the component partition is admissible iff (d) holds
        CHECK(is_k_admissible_matching(g, m, k).has_value() == (excess <= k - 1));
      }
      return true;
    });
  }
}

TEST_CASE("section 4 verdicts") {
  const Section4Verdict ex = verify_section4(example11, gf2);
  CHECK(ex.reg_equals_aim_plus_k);
  CHECK(ex.aim_step_bound);
  CHECK(ex.distant_edge_lower_bound);
  CHECK(ex.aim_recursion);
  CHECK(ex.remark_bounds);
  CHECK(ex.holds());

  CHECK(verify_section4(path_graph(8), gf2).holds());
  CHECK(verify_section4(star_graph(5), gf2).holds());
  CHECK(verify_section4(Graph::from_edges(4, {}), gf2).holds());

  for (std::uint64_t seed = 1; seed <= 25; ++seed)
    CHECK(verify_section4(random_forest(8, seed), gf2).holds());

  CHECK_THROWS_AS(verify_section4(cycle_graph(5), gf2), std::domain_error);
}

TEST_CASE("certificates satisfy the definition") {
  for (const Graph& g : {path_graph(7), example11}) {
    for_each_matching(g, [&](const Matching& m) {
      for (int k = 1; k <= 3; ++k) {
        const auto cert = is_k_admissible_matching(g, m, k);
        if (!cert) continue;
        // parts partition M
        std::size_t covered = 0;
        std::vector<int> sizes;
        for (const auto& part : cert->parts) {
          covered += part.size();
          sizes.push_back(static_cast<int>(part.size()));
        }
        CHECK(covered == m.edges.size());
        CHECK(is_k_admissible_sequence(sizes, k));
        // cross-part gaps
        for (std::size_t a = 0; a < cert->parts.size(); ++a)
          for (std::size_t b = a + 1; b < cert->parts.size(); ++b)
            for (Edge ea : cert->parts[a])
              for (Edge eb : cert->parts[b]) CHECK(is_gap(g, ea, eb));
      }
      return true;
    });
  }
}

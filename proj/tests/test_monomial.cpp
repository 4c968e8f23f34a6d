#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sqfpow/corpus.hpp"
#include "sqfpow/monomial.hpp"

using namespace sqfpow;

namespace {

SqfMonomial mono(std::initializer_list<int> vars, int ambient) {
  return SqfMonomial{subset_from(std::vector<int>(vars)), ambient};
}

MonomialIdeal ideal_of(std::initializer_list<std::initializer_list<int>> gens, int ambient) {
  std::vector<Subset> raw;
  for (const auto& g : gens) raw.push_back(subset_from(std::vector<int>(g)));
  return MonomialIdeal::minimalize(ambient, raw);
}

}  // namespace

TEST_CASE("monomial arithmetic") {
  CHECK(lcm(mono({1, 2}, 4), mono({2, 3}, 4)) == mono({1, 2, 3}, 4));
  CHECK(divides(mono({2}, 3), mono({1, 2}, 3)));
  CHECK_FALSE(divides(mono({1, 2}, 3), mono({2}, 3)));
  CHECK(coprime(mono({1, 2}, 4), mono({3, 4}, 4)));
  CHECK_FALSE(coprime(mono({1, 2}, 4), mono({2, 3}, 4)));
  CHECK_THROWS_AS(lcm(mono({1}, 3), mono({1}, 4)), std::invalid_argument);
  CHECK(mono({1, 2}, 4).str() == "x1*x2");
  CHECK(mono({}, 4).str() == "1");
}

TEST_CASE("minimalize") {
  CHECK(ideal_of({{1, 2, 3, 4}, {2, 3, 4}}, 4) == ideal_of({{2, 3, 4}}, 4));
  CHECK(MonomialIdeal::minimalize(3, std::vector<Subset>{}).is_zero());
  CHECK(ideal_of({{1, 2}, {3, 4}}, 4).num_gens() == 2);
  // 1 swallows everything
  const MonomialIdeal unit = MonomialIdeal::minimalize(
      3, std::vector<Subset>{0, subset_from({1, 2})});
  CHECK(unit.is_unit());
}

TEST_CASE("sum, intersection, scale, variable multiples") {
  const MonomialIdeal a = ideal_of({{1, 2}}, 3);
  const MonomialIdeal b = ideal_of({{2, 3}}, 3);
  CHECK(ideal_intersection(a, b) == ideal_of({{1, 2, 3}}, 3));

  const MonomialIdeal p3 = edge_ideal(path_graph(3));
  const MonomialIdeal scaled =
      scale(mono({5}, 5), MonomialIdeal::minimalize(5, std::vector<Subset>{
                                                           subset_from({1, 2}),
                                                           subset_from({2, 3})}));
  CHECK(scaled == ideal_of({{1, 2, 5}, {2, 3, 5}}, 5));
  CHECK_THROWS_AS(scale(mono({2}, 3), p3), std::domain_error);

  // I(P4) split at x4: I1 cap I2 = (x2 x3 x4)
  const MonomialIdeal i1 = ideal_of({{1, 2}, {2, 3}}, 4);
  const MonomialIdeal i2 = ideal_of({{3, 4}}, 4);
  CHECK(ideal_intersection(i1, i2) == ideal_of({{2, 3, 4}}, 4));

  CHECK(variable_multiple({4, 5}, ideal_of({{1, 2}}, 5)) ==
        ideal_of({{1, 2, 4}, {1, 2, 5}}, 5));
  CHECK_THROWS_AS(variable_multiple({1}, ideal_of({{1, 2}}, 3)), std::domain_error);

  // algebra on identical operands
  const MonomialIdeal c = ideal_of({{1, 2}, {3, 4}}, 5);
  const MonomialIdeal d = ideal_of({{2, 3}}, 5);
  CHECK(ideal_sum(c, d) == ideal_sum(d, c));
  CHECK(ideal_intersection(c, d) == ideal_intersection(d, c));
  CHECK(ideal_sum(c, c) == c);
  CHECK(ideal_intersection(c, c) == c);
  const MonomialIdeal e = ideal_of({{1, 5}}, 5);
  CHECK(ideal_sum(ideal_sum(c, d), e) == ideal_sum(c, ideal_sum(d, e)));
  CHECK(ideal_intersection(ideal_intersection(c, d), e) ==
        ideal_intersection(c, ideal_intersection(d, e)));
}

TEST_CASE("edge ideals") {
  CHECK(edge_ideal(path_graph(3)) == ideal_of({{1, 2}, {2, 3}}, 3));
  CHECK(edge_ideal(Graph::from_edges(4, {})).is_zero());
  CHECK(edge_ideal(cycle_graph(3)) == ideal_of({{1, 2}, {2, 3}, {1, 3}}, 3));
}

TEST_CASE("squarefree powers") {
  const MonomialIdeal p4 = edge_ideal(path_graph(4));
  CHECK(squarefree_power(p4, 2) == ideal_of({{1, 2, 3, 4}}, 4));
  CHECK(squarefree_power(p4, 3).is_zero());
  CHECK(squarefree_power(p4, 0).is_unit());

  const MonomialIdeal p5 = edge_ideal(path_graph(5));
  CHECK(squarefree_power(p5, 2) ==
        ideal_of({{1, 2, 3, 4}, {1, 2, 4, 5}, {2, 3, 4, 5}}, 5));
}

TEST_CASE("squarefree powers of edge ideals match the k-matching construction") {
  std::vector<Graph> corpus = all_forests_up_to(8);
  for (int n = 5; n <= 10; ++n) corpus.push_back(cycle_graph(n));
  corpus.push_back(random_graph(7, 0.5, 3));
  corpus.push_back(random_graph(8, 0.4, 4));
  corpus.push_back(random_graph(9, 0.35, 5));
  corpus.push_back(random_graph(10, 0.3, 6));
  corpus.push_back(random_graph(10, 0.6, 7));
  for (const Graph& g : corpus) {
    const MonomialIdeal ideal = edge_ideal(g);
    const int nu = matching_number(g);
    for (int k = 1; k <= nu + 1; ++k) {
      std::vector<Subset> from_matchings;
      for (const Matching& m : k_matchings(g, k)) from_matchings.push_back(m.vertices());
      CHECK(squarefree_power(ideal, k) ==
            MonomialIdeal::minimalize(g.vertex_count(), from_matchings));
    }
  }
}

TEST_CASE("monomial grade") {
  CHECK(monomial_grade(edge_ideal(path_graph(4))) == 2);
  CHECK(monomial_grade(ideal_of({{1, 2}, {2, 3}, {3, 4}}, 4)) == 2);
  CHECK(monomial_grade(ideal_of({{1}}, 2)) == 1);
  CHECK(monomial_grade(MonomialIdeal::zero(3)) == 0);
}

TEST_CASE("powers vanish exactly beyond the grade") {
  std::vector<Graph> corpus = all_forests_up_to(6);
  corpus.push_back(cycle_graph(6));
  for (const Graph& g : corpus) {
    const MonomialIdeal ideal = edge_ideal(g);
    const int nu = monomial_grade(ideal);
    CHECK(nu == matching_number(g));
    for (int k = 1; k <= nu + 2; ++k)
      CHECK(squarefree_power(ideal, k).is_zero() == (k > nu));
  }
}

TEST_CASE("initial degree") {
  CHECK(initial_degree(ideal_of({{4}, {1, 2}}, 4)) == 1);
  CHECK(initial_degree(squarefree_power(edge_ideal(path_graph(5)), 2)) == 4);
  for (int k = 1; k <= 3; ++k)
    CHECK(initial_degree(squarefree_power(edge_ideal(path_graph(7)), k)) == 2 * k);
  CHECK_THROWS_AS(initial_degree(MonomialIdeal::zero(3)), std::domain_error);
}

TEST_CASE("partial star") {
  CHECK(partial_star(ideal_of({{1, 2, 3}}, 3)) ==
        ideal_of({{1, 2}, {1, 3}, {2, 3}}, 3));
  CHECK(partial_star(edge_ideal(path_graph(3))) == ideal_of({{1}, {2}, {3}}, 3));
  CHECK_THROWS_AS(partial_star(MonomialIdeal::unit(3)), std::domain_error);
  CHECK_THROWS_AS(partial_star(MonomialIdeal::zero(3)), std::domain_error);
}

TEST_CASE("partial star of a power lands in the previous power") {
  for (const Graph& g : all_forests_up_to(7)) {
    const MonomialIdeal ideal = edge_ideal(g);
    const int nu = monomial_grade(ideal);
    for (int k = 2; k <= nu; ++k) {
      const MonomialIdeal upper = partial_star(squarefree_power(ideal, k));
      const MonomialIdeal lower = squarefree_power(ideal, k - 1);
      for (const auto& gen : upper.generators()) CHECK(lower.contains(gen));
    }
  }
}

TEST_CASE("membership and rendering") {
  const MonomialIdeal p3 = edge_ideal(path_graph(3));
  CHECK(p3.contains(mono({1, 2, 3}, 3)));
  CHECK_FALSE(p3.contains(mono({1, 3}, 3)));
  CHECK(p3.str() == "(x1*x2, x2*x3)");
  CHECK(MonomialIdeal::zero(2).str() == "(0)");
  CHECK(MonomialIdeal::unit(2).str() == "(1)");
}

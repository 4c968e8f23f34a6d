#ifndef SQFPOW_MONOMIAL_HPP
#define SQFPOW_MONOMIAL_HPP

#include <string>
#include <vector>

#include "sqfpow/graph.hpp"
#include "sqfpow/subsets.hpp"

namespace sqfpow {

// A squarefree monomial x_A in K[x_1..x_ambient], identified with its
// support A. The constant 1 is the empty support.
struct SqfMonomial {
  Subset support = 0;
  int ambient = 0;

  int degree() const { return popcount(support); }
  bool is_one() const { return support == 0; }
  std::string str() const;

  friend bool operator==(const SqfMonomial&, const SqfMonomial&) = default;
};

SqfMonomial lcm(const SqfMonomial& u, const SqfMonomial& v);
bool divides(const SqfMonomial& u, const SqfMonomial& v);
bool coprime(const SqfMonomial& u, const SqfMonomial& v);

// A squarefree monomial ideal held by its unique minimal generating set.
// The zero ideal has no generators; the unit ideal is generated by 1.
// Generators are sorted by (degree, support-lex) for determinism.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  static MonomialIdeal zero(int ambient);
  static MonomialIdeal unit(int ambient);

  // Discards every monomial strictly divisible by another; the survivors are
  // the minimal generating set.
  static MonomialIdeal minimalize(int ambient, std::vector<Subset> gens);
  static MonomialIdeal minimalize(int ambient, const std::vector<SqfMonomial>& gens);

  int ambient() const { return ambient_; }
  const std::vector<Subset>& gens() const { return gens_; }
  int num_gens() const { return static_cast<int>(gens_.size()); }
  std::vector<SqfMonomial> generators() const;

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0] == 0; }

  // Membership test: some generator divides m.
  bool contains(const SqfMonomial& m) const;

  std::string str() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int ambient_ = 0;
  std::vector<Subset> gens_;
};

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);

// For monomial ideals the intersection is generated by the pairwise lcms.
MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b);

// u * I for a multiplier u coprime to every generator (so the result stays
// squarefree); violating that is a domain error.
MonomialIdeal scale(const SqfMonomial& u, const MonomialIdeal& ideal);

// (x_{i_1},...,x_{i_t}) * I, same coprimality requirement per variable.
MonomialIdeal variable_multiple(const std::vector<int>& vars, const MonomialIdeal& ideal);

// Generators x_u x_v over the edges; ambient is the vertex count of g.
MonomialIdeal edge_ideal(const Graph& g);

// k-th squarefree power: generated by products of k pairwise-coprime minimal
// generators, minimalized. k = 0 gives the unit ideal (empty product); the
// result is zero iff k exceeds the monomial grade.
MonomialIdeal squarefree_power(const MonomialIdeal& ideal, int k);

// Monomial grade: the largest size of a pairwise-coprime subset of the
// minimal generators (= longest monomial regular sequence). 0 for the zero
// ideal.
int monomial_grade(const MonomialIdeal& ideal);

// Minimum generator degree. Domain error on the zero ideal.
int initial_degree(const MonomialIdeal& ideal);

// Ideal generated by g / x_i over all minimal generators g and variables
// x_i dividing g. Domain error if 1 is a generator.
MonomialIdeal partial_star(const MonomialIdeal& ideal);

}  // namespace sqfpow

#endif

#ifndef SQFPOW_BETTI_HPP
#define SQFPOW_BETTI_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sqfpow/field.hpp"
#include "sqfpow/monomial.hpp"

namespace sqfpow {

// Graded Betti numbers of an ideal: entries (i, j) -> beta_{i,j}(I) > 0.
// Tables are reported for the ideal itself, so beta_{0,j} counts minimal
// generators of degree j.
class BettiTable {
 public:
  BettiTable() = default;
  BettiTable(int ambient, FieldSpec field) : ambient_(ambient), field_(field) {}

  int ambient() const { return ambient_; }
  const FieldSpec& field() const { return field_; }

  long long beta(int i, int j) const;
  void add(int i, int j, long long value);

  const std::map<std::pair<int, int>, long long>& entries() const { return entries_; }
  bool same_entries(const BettiTable& other) const { return entries_ == other.entries_; }

  // max i with a nonzero entry.
  int projective_dimension() const;
  // max j - i over nonzero entries.
  int regularity() const;

  std::string str() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  int ambient_ = 0;
  FieldSpec field_;
  std::map<std::pair<int, int>, long long> entries_;
};

// Stanley-Reisner test: F is a face of the complex of I iff no generator
// support is contained in F (that is, x_F is not in I). I must be proper.
bool stanley_reisner_face(const MonomialIdeal& ideal, Subset face);

// Supports of the lcm lattice: the closure of the generator supports under
// union, i.e. the supports of lcms of non-empty generator subsets. Sorted.
std::vector<Subset> lcm_degrees(const MonomialIdeal& ideal);

// Exact graded Betti numbers via the Hochster sum
//   beta_{i,j}(I) = sum over |W| = j of dim H~_{j-i-2}(complex restricted to W),
// with W ranging over lcm_degrees(ideal). Requires a nonzero proper
// squarefree ideal.
BettiTable betti_table(const MonomialIdeal& ideal, const FieldSpec& field);

// Same sum taken over all 2^n vertex subsets; the independent reference
// route for testing the lcm-lattice pruning. Intended for small ambients.
BettiTable betti_table_full_hochster(const MonomialIdeal& ideal, const FieldSpec& field);

struct HomologicalInvariants {
  int projdim = 0;         // of the ideal
  int depth_quotient = 0;  // depth(S/I) = n - projdim(I) - 1
  int reg = 0;             // max j - i
};

// Domain error on the zero or unit ideal (their regularity is undefined
// here); depth of the zero ideal's quotient is available separately below.
HomologicalInvariants invariants(const MonomialIdeal& ideal, const FieldSpec& field);

// depth(S/I); the zero ideal yields the whole ring, depth n.
int depth_quotient(const MonomialIdeal& ideal, const FieldSpec& field);

// Per-power helpers, k between 1 and the monomial grade.
int depth_of_power(const MonomialIdeal& ideal, int k, const FieldSpec& field);
int reg_of_power(const MonomialIdeal& ideal, int k, const FieldSpec& field);

// Normalized depth g_I(k) = depth(S/I^[k]) - (indeg(I^[k]) - 1).
int normalized_depth(const MonomialIdeal& ideal, int k, const FieldSpec& field);

// Profiles over k = 1..monomial_grade(I).
std::map<int, int> g_profile(const MonomialIdeal& ideal, const FieldSpec& field);
std::map<int, int> reg_profile(const MonomialIdeal& ideal, const FieldSpec& field);
std::map<int, int> depth_profile(const MonomialIdeal& ideal, const FieldSpec& field);

}  // namespace sqfpow

#endif

#include "sqfpow/betti.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sqfpow/homology.hpp"

namespace sqfpow {

long long BettiTable::beta(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, long long value) {
  if (value == 0) return;
  entries_[{i, j}] += value;
  if (entries_[{i, j}] == 0) entries_.erase({i, j});
}

int BettiTable::projective_dimension() const {
  int pd = 0;
  for (const auto& [ij, v] : entries_) pd = std::max(pd, ij.first);
  return pd;
}

int BettiTable::regularity() const {
  int r = 0;
  for (const auto& [ij, v] : entries_) r = std::max(r, ij.second - ij.first);
  return r;
}

std::string BettiTable::str() const {
  std::string out;
  for (const auto& [ij, v] : entries_) {
    if (!out.empty()) out += " ";
    out += "b(" + std::to_string(ij.first) + "," + std::to_string(ij.second) +
           ")=" + std::to_string(v);
  }
  return out.empty() ? "empty" : out;
}

bool stanley_reisner_face(const MonomialIdeal& ideal, Subset face) {
  if (ideal.is_unit()) throw std::invalid_argument("stanley_reisner_face: ideal must be proper");
  for (Subset g : ideal.gens())
    if (subset_of(g, face)) return false;
  return true;
}

std::vector<Subset> lcm_degrees(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw std::invalid_argument("lcm_degrees: zero ideal");
  std::set<Subset> closed(ideal.gens().begin(), ideal.gens().end());
  std::vector<Subset> work(closed.begin(), closed.end());
  while (!work.empty()) {
    const Subset w = work.back();
    work.pop_back();
    for (Subset g : ideal.gens()) {
      const Subset u = w | g;
      if (closed.insert(u).second) work.push_back(u);
    }
  }
  return std::vector<Subset>(closed.begin(), closed.end());
}

namespace {

// Faces of the Stanley-Reisner complex restricted to W, on compressed labels
// 1..|W|: subsets of W containing no generator support.
std::vector<Subset> restriction_faces(const MonomialIdeal& ideal, Subset w) {
  const auto verts = elements(w);
  const int m = static_cast<int>(verts.size());
  std::vector<Subset> compressed_gens;
  for (Subset g : ideal.gens()) {
    if (!subset_of(g, w)) continue;
    Subset c = 0;
    for (int i = 0; i < m; ++i)
      if (contains(g, verts[static_cast<std::size_t>(i)])) c |= bit_of(i + 1);
    compressed_gens.push_back(c);
  }
  const std::size_t total = std::size_t{1} << m;
  std::vector<bool> bad(total, false);
  for (Subset g : compressed_gens) bad[g] = true;
  for (int b = 0; b < m; ++b) {
    const std::size_t mask = std::size_t{1} << b;
    for (std::size_t f = 0; f < total; ++f)
      if ((f & mask) && bad[f ^ mask]) bad[f] = true;
  }
  std::vector<Subset> faces;
  faces.reserve(total);
  for (std::size_t f = 0; f < total; ++f)
    if (!bad[f]) faces.push_back(static_cast<Subset>(f));
  return faces;
}

void add_hochster_terms(BettiTable& table, const MonomialIdeal& ideal, Subset w,
                        const FieldSpec& field) {
  const int j = popcount(w);
  const auto faces = restriction_faces(ideal, w);
  for (const auto& [d, h] : reduced_homology_dims(faces, field)) {
    const int i = j - 2 - d;
    if (i >= 0) table.add(i, j, h);
  }
}

void check_input(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw std::domain_error("betti table of the zero ideal");
  if (ideal.is_unit()) throw std::domain_error("betti table of the unit ideal");
}

}  // namespace

BettiTable betti_table(const MonomialIdeal& ideal, const FieldSpec& field) {
  check_input(ideal);
  BettiTable table(ideal.ambient(), field);
  for (Subset w : lcm_degrees(ideal)) add_hochster_terms(table, ideal, w, field);

  // beta_{0,j} must reproduce the generator degree counts.
  std::map<int, long long> degree_counts;
  for (Subset g : ideal.gens()) ++degree_counts[popcount(g)];
  for (const auto& [deg, count] : degree_counts) {
    if (table.beta(0, deg) != count)
      throw std::logic_error("hochster sum disagrees with generator count in degree " +
                             std::to_string(deg));
  }
  return table;
}

BettiTable betti_table_full_hochster(const MonomialIdeal& ideal, const FieldSpec& field) {
  check_input(ideal);
  const int n = ideal.ambient();
  if (n > 20) throw std::invalid_argument("full hochster sum limited to ambient <= 20");
  BettiTable table(n, field);
  const Subset all = full_set(n);
  for (Subset w = 0; w <= all; ++w) add_hochster_terms(table, ideal, w, field);
  return table;
}

HomologicalInvariants invariants(const MonomialIdeal& ideal, const FieldSpec& field) {
  const BettiTable table = betti_table(ideal, field);
  HomologicalInvariants out;
  out.projdim = table.projective_dimension();
  out.reg = table.regularity();
  // Auslander-Buchsbaum: depth(S/I) = n - projdim(S/I), projdim(S/I) = projdim(I) + 1.
  out.depth_quotient = ideal.ambient() - out.projdim - 1;
  return out;
}

int depth_quotient(const MonomialIdeal& ideal, const FieldSpec& field) {
  if (ideal.is_zero()) return ideal.ambient();
  return invariants(ideal, field).depth_quotient;
}

int depth_of_power(const MonomialIdeal& ideal, int k, const FieldSpec& field) {
  const MonomialIdeal power = squarefree_power(ideal, k);
  if (power.is_zero())
    throw std::invalid_argument("power " + std::to_string(k) + " exceeds the monomial grade");
  return depth_quotient(power, field);
}

int reg_of_power(const MonomialIdeal& ideal, int k, const FieldSpec& field) {
  const MonomialIdeal power = squarefree_power(ideal, k);
  if (power.is_zero())
    throw std::invalid_argument("power " + std::to_string(k) + " exceeds the monomial grade");
  return invariants(power, field).reg;
}

int normalized_depth(const MonomialIdeal& ideal, int k, const FieldSpec& field) {
  const MonomialIdeal power = squarefree_power(ideal, k);
  if (power.is_zero())
    throw std::invalid_argument("power " + std::to_string(k) + " exceeds the monomial grade");
  return depth_quotient(power, field) - (initial_degree(power) - 1);
}

std::map<int, int> g_profile(const MonomialIdeal& ideal, const FieldSpec& field) {
  std::map<int, int> out;
  const int nu = monomial_grade(ideal);
  for (int k = 1; k <= nu; ++k) out[k] = normalized_depth(ideal, k, field);
  return out;
}

std::map<int, int> reg_profile(const MonomialIdeal& ideal, const FieldSpec& field) {
  std::map<int, int> out;
  const int nu = monomial_grade(ideal);
  for (int k = 1; k <= nu; ++k) out[k] = reg_of_power(ideal, k, field);
  return out;
}

std::map<int, int> depth_profile(const MonomialIdeal& ideal, const FieldSpec& field) {
  std::map<int, int> out;
  const int nu = monomial_grade(ideal);
  for (int k = 1; k <= nu; ++k) out[k] = depth_of_power(ideal, k, field);
  return out;
}

}  // namespace sqfpow

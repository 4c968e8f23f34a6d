#include "sqfpow/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace sqfpow {

namespace {

void check_same_ambient(const SqfMonomial& u, const SqfMonomial& v) {
  if (u.ambient != v.ambient)
    throw std::invalid_argument("ambient mismatch: " + std::to_string(u.ambient) + " vs " +
                                std::to_string(v.ambient));
}

void check_same_ambient(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("ambient mismatch: " + std::to_string(a.ambient()) + " vs " +
                                std::to_string(b.ambient()));
}

// (degree, then support-lex via the packed word) — ascending bitmask order
// within one degree is lexicographic order on sorted index lists.
bool gen_order(Subset a, Subset b) {
  const int da = popcount(a), db = popcount(b);
  if (da != db) return da < db;
  return a < b;
}

}  // namespace

std::string SqfMonomial::str() const {
  if (is_one()) return "1";
  std::string out;
  for (int v : elements(support)) {
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(v);
  }
  return out;
}

SqfMonomial lcm(const SqfMonomial& u, const SqfMonomial& v) {
  check_same_ambient(u, v);
  return SqfMonomial{u.support | v.support, u.ambient};
}

bool divides(const SqfMonomial& u, const SqfMonomial& v) {
  check_same_ambient(u, v);
  return subset_of(u.support, v.support);
}

bool coprime(const SqfMonomial& u, const SqfMonomial& v) {
  check_same_ambient(u, v);
  return (u.support & v.support) == 0;
}

MonomialIdeal MonomialIdeal::zero(int ambient) {
  MonomialIdeal out;
  out.ambient_ = ambient;
  return out;
}

MonomialIdeal MonomialIdeal::unit(int ambient) {
  MonomialIdeal out;
  out.ambient_ = ambient;
  out.gens_.push_back(0);
  return out;
}

MonomialIdeal MonomialIdeal::minimalize(int ambient, std::vector<Subset> gens) {
  if (ambient < 0 || ambient > kMaxVertices) throw std::invalid_argument("bad ambient");
  const Subset range = full_set(ambient);
  for (Subset g : gens)
    if (!subset_of(g, range)) throw std::invalid_argument("generator support out of ambient");
  std::sort(gens.begin(), gens.end(), gen_order);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Subset> minimal;
  for (Subset g : gens) {
    bool dominated = false;
    for (Subset m : minimal) {
      if (subset_of(m, g)) {  // m divides g; strict because duplicates are gone
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(g);
  }
  MonomialIdeal out;
  out.ambient_ = ambient;
  out.gens_ = std::move(minimal);
  return out;
}

MonomialIdeal MonomialIdeal::minimalize(int ambient, const std::vector<SqfMonomial>& gens) {
  std::vector<Subset> raw;
  raw.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.ambient != ambient) throw std::invalid_argument("ambient mismatch in generator list");
    raw.push_back(g.support);
  }
  return minimalize(ambient, std::move(raw));
}

std::vector<SqfMonomial> MonomialIdeal::generators() const {
  std::vector<SqfMonomial> out;
  out.reserve(gens_.size());
  for (Subset g : gens_) out.push_back(SqfMonomial{g, ambient_});
  return out;
}

bool MonomialIdeal::contains(const SqfMonomial& m) const {
  if (m.ambient != ambient_) throw std::invalid_argument("ambient mismatch");
  for (Subset g : gens_)
    if (subset_of(g, m.support)) return true;
  return false;
}

std::string MonomialIdeal::str() const {
  if (is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += SqfMonomial{gens_[i], ambient_}.str();
  }
  return out + ")";
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ambient(a, b);
  std::vector<Subset> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal::minimalize(a.ambient(), std::move(gens));
}

MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ambient(a, b);
  std::vector<Subset> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (Subset u : a.gens())
    for (Subset v : b.gens()) gens.push_back(u | v);
  return MonomialIdeal::minimalize(a.ambient(), std::move(gens));
}

MonomialIdeal scale(const SqfMonomial& u, const MonomialIdeal& ideal) {
  if (u.ambient != ideal.ambient()) throw std::invalid_argument("ambient mismatch");
  std::vector<Subset> gens;
  gens.reserve(ideal.gens().size());
  for (Subset g : ideal.gens()) {
    if (g & u.support)
      throw std::domain_error("scale: multiplier " + u.str() +
                              " shares a variable with a generator, product would not be squarefree");
    gens.push_back(g | u.support);
  }
  return MonomialIdeal::minimalize(ideal.ambient(), std::move(gens));
}

MonomialIdeal variable_multiple(const std::vector<int>& vars, const MonomialIdeal& ideal) {
  std::vector<Subset> gens;
  gens.reserve(vars.size() * ideal.gens().size());
  for (int v : vars) {
    if (v < 1 || v > ideal.ambient()) throw std::invalid_argument("variable out of ambient");
    for (Subset g : ideal.gens()) {
      if (contains(g, v))
        throw std::domain_error("variable_multiple: x" + std::to_string(v) +
                                " divides a generator, product would not be squarefree");
      gens.push_back(g | bit_of(v));
    }
  }
  return MonomialIdeal::minimalize(ideal.ambient(), std::move(gens));
}

MonomialIdeal edge_ideal(const Graph& g) {
  std::vector<Subset> gens;
  gens.reserve(g.edges().size());
  for (Edge e : g.edges()) gens.push_back(edge_set(e));
  return MonomialIdeal::minimalize(g.vertex_count(), std::move(gens));
}

MonomialIdeal squarefree_power(const MonomialIdeal& ideal, int k) {
  if (k < 0) throw std::invalid_argument("power must be >= 0");
  if (k == 0) return MonomialIdeal::unit(ideal.ambient());
  const auto& gens = ideal.gens();
  std::vector<Subset> products;
  // Products of k pairwise-coprime generators; squarefree products of
  // squarefree monomials force disjoint supports, so unions suffice.
  auto rec = [&](auto&& self, std::size_t from, Subset acc, int need) -> void {
    if (need == 0) {
      products.push_back(acc);
      return;
    }
    for (std::size_t i = from; i < gens.size(); ++i) {
      if (gens.size() - i < static_cast<std::size_t>(need)) break;
      if (gens[i] & acc) continue;
      self(self, i + 1, acc | gens[i], need - 1);
    }
  };
  rec(rec, 0, 0, k);
  return MonomialIdeal::minimalize(ideal.ambient(), std::move(products));
}

int monomial_grade(const MonomialIdeal& ideal) {
  const auto& gens = ideal.gens();
  int best = 0;
  auto rec = [&](auto&& self, std::size_t from, Subset acc, int size) -> void {
    best = std::max(best, size);
    if (size + static_cast<int>(gens.size() - from) <= best) return;
    for (std::size_t i = from; i < gens.size(); ++i) {
      if (gens[i] & acc) continue;
      self(self, i + 1, acc | gens[i], size + 1);
    }
  };
  rec(rec, 0, 0, 0);
  return best;
}

int initial_degree(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw std::domain_error("initial degree of the zero ideal");
  // Generators are sorted by degree first.
  return popcount(ideal.gens().front());
}

MonomialIdeal partial_star(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw std::domain_error("partial_star of the zero ideal");
  if (ideal.is_unit()) throw std::domain_error("partial_star: 1 is a generator");
  std::vector<Subset> gens;
  for (Subset g : ideal.gens()) {
    for (Subset rest = g; rest; rest &= rest - 1) {
      const Subset dropped = rest & ~(rest - 1);  // lowest remaining bit
      gens.push_back(g & ~dropped);
    }
  }
  return MonomialIdeal::minimalize(ideal.ambient(), std::move(gens));
}

}  // namespace sqfpow

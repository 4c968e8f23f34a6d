#ifndef SQFPOW_FIELD_HPP
#define SQFPOW_FIELD_HPP

#include <stdexcept>
#include <string>

namespace sqfpow {

// Coefficient field for homological computations: GF(p) for a small prime p,
// or the rationals (characteristic 0). The default everywhere is GF(2).
struct FieldSpec {
  int characteristic = 2;  // 0 means rationals

  static FieldSpec gf(int p) {
    if (p < 2) throw std::invalid_argument("field characteristic must be >= 2");
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("field characteristic must be prime: " + std::to_string(p));
    if (p > 46337) throw std::invalid_argument("field characteristic too large");
    return FieldSpec{p};
  }

  static FieldSpec rationals() { return FieldSpec{0}; }

  bool is_rational() const { return characteristic == 0; }

  std::string name() const {
    return is_rational() ? "q" : "gf" + std::to_string(characteristic);
  }

  // Parses "gf2", "gf3", "q". Anything else is an input error.
  static FieldSpec parse(const std::string& s) {
    if (s == "q" || s == "Q") return rationals();
    if (s.rfind("gf", 0) == 0) return gf(std::stoi(s.substr(2)));
    throw std::invalid_argument("unknown field: " + s);
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

}  // namespace sqfpow

#endif

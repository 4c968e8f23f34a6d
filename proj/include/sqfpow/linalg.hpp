#ifndef SQFPOW_LINALG_HPP
#define SQFPOW_LINALG_HPP

#include <vector>

#include "sqfpow/field.hpp"

namespace sqfpow {

// Exact rank of a dense integer matrix over the given field. Rows may be
// ragged-free (all the same length); an empty matrix has rank 0.
//
// GF(2) uses word-packed elimination, GF(p) modular elimination, and the
// rationals fraction-free (Bareiss) elimination on arbitrary-precision
// integers, so every path is exact.
int matrix_rank(const std::vector<std::vector<int>>& rows, const FieldSpec& field);

int rank_gf2(const std::vector<std::vector<int>>& rows);
int rank_gfp(const std::vector<std::vector<int>>& rows, int p);
int rank_rational(const std::vector<std::vector<int>>& rows);

}  // namespace sqfpow

#endif

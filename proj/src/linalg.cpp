#include "sqfpow/linalg.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sqfpow {

namespace {
using bigint = boost::multiprecision::cpp_int;
}

int rank_gf2(const std::vector<std::vector<int>>& rows) {
  if (rows.empty() || rows[0].empty()) return 0;
  const std::size_t ncols = rows[0].size();
  const std::size_t words = (ncols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != ncols) throw std::invalid_argument("ragged matrix");
    std::vector<std::uint64_t> packed(words, 0);
    for (std::size_t c = 0; c < ncols; ++c)
      if (row[c] & 1) packed[c >> 6] |= (std::uint64_t{1} << (c & 63));
    m.push_back(std::move(packed));
  }

  int rank = 0;
  std::size_t row_at = 0;
  for (std::size_t col = 0; col < ncols && row_at < m.size(); ++col) {
    const std::size_t w = col >> 6;
    const std::uint64_t mask = std::uint64_t{1} << (col & 63);
    std::size_t pivot = row_at;
    while (pivot < m.size() && !(m[pivot][w] & mask)) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[row_at]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r != row_at && (m[r][w] & mask)) {
        for (std::size_t i = w; i < words; ++i) m[r][i] ^= m[row_at][i];
      }
    }
    ++row_at;
    ++rank;
  }
  return rank;
}

int rank_gfp(const std::vector<std::vector<int>>& rows, int p) {
  if (rows.empty() || rows[0].empty()) return 0;
  const std::size_t ncols = rows[0].size();
  std::vector<std::vector<std::int64_t>> m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != ncols) throw std::invalid_argument("ragged matrix");
    std::vector<std::int64_t> r(ncols);
    for (std::size_t c = 0; c < ncols; ++c) {
      std::int64_t v = row[c] % p;
      if (v < 0) v += p;
      r[c] = v;
    }
    m.push_back(std::move(r));
  }

  auto inv_mod = [p](std::int64_t a) {
    // Fermat: p prime, a != 0 mod p.
    std::int64_t result = 1, base = a % p, e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };

  int rank = 0;
  std::size_t row_at = 0;
  for (std::size_t col = 0; col < ncols && row_at < m.size(); ++col) {
    std::size_t pivot = row_at;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[row_at]);
    const std::int64_t scale = inv_mod(m[row_at][col]);
    for (std::size_t c = col; c < ncols; ++c) m[row_at][c] = m[row_at][c] * scale % p;
    for (std::size_t r = row_at + 1; r < m.size(); ++r) {
      if (m[r][col] == 0) continue;
      const std::int64_t f = m[r][col];
      for (std::size_t c = col; c < ncols; ++c) {
        m[r][c] = (m[r][c] - f * m[row_at][c]) % p;
        if (m[r][c] < 0) m[r][c] += p;
      }
    }
    ++row_at;
    ++rank;
  }
  return rank;
}

int rank_rational(const std::vector<std::vector<int>>& rows) {
  if (rows.empty() || rows[0].empty()) return 0;
  const std::size_t ncols = rows[0].size();
  std::vector<std::vector<bigint>> m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != ncols) throw std::invalid_argument("ragged matrix");
    m.emplace_back(row.begin(), row.end());
  }

  // Bareiss fraction-free elimination: every division is exact, the pivots
  // are leading minors, and the rank is the number of pivots consumed.
  bigint prev_pivot = 1;
  int rank = 0;
  std::size_t row_at = 0;
  for (std::size_t col = 0; col < ncols && row_at < m.size(); ++col) {
    std::size_t pivot = row_at;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[row_at]);
    const bigint pv = m[row_at][col];
    for (std::size_t r = row_at + 1; r < m.size(); ++r) {
      for (std::size_t c = col + 1; c < ncols; ++c) {
        m[r][c] = (m[r][c] * pv - m[r][col] * m[row_at][c]) / prev_pivot;
      }
      m[r][col] = 0;
    }
    prev_pivot = pv;
    ++row_at;
    ++rank;
  }
  return rank;
}

int matrix_rank(const std::vector<std::vector<int>>& rows, const FieldSpec& field) {
  if (field.is_rational()) return rank_rational(rows);
  if (field.characteristic == 2) return rank_gf2(rows);
  return rank_gfp(rows, field.characteristic);
}

}  // namespace sqfpow

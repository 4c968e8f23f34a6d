#include "sqfpow/homology.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "sqfpow/linalg.hpp"

namespace sqfpow {

std::map<int, int> reduced_homology_dims(const std::vector<Subset>& faces,
                                         const FieldSpec& field) {
  std::map<int, int> result;
  if (faces.empty()) return result;  // void complex

  int max_card = 0;
  for (Subset f : faces) max_card = std::max(max_card, popcount(f));

  // Faces bucketed by cardinality, sorted for deterministic matrices.
  std::vector<std::vector<Subset>> by_card(static_cast<std::size_t>(max_card) + 1);
  for (Subset f : faces) by_card[static_cast<std::size_t>(popcount(f))].push_back(f);
  for (auto& bucket : by_card) {
    std::sort(bucket.begin(), bucket.end());
    bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
  }
  if (by_card[0].empty())
    throw std::invalid_argument("reduced_homology_dims: non-void complex must contain the empty face");

  std::vector<std::unordered_map<Subset, int>> index(by_card.size());
  for (std::size_t c = 0; c < by_card.size(); ++c)
    for (std::size_t i = 0; i < by_card[c].size(); ++i)
      index[c][by_card[c][i]] = static_cast<int>(i);

  // rank of the boundary map from cardinality c to cardinality c-1
  std::vector<int> boundary_rank(by_card.size() + 1, 0);
  for (std::size_t c = 1; c < by_card.size(); ++c) {
    const auto& cols = by_card[c];
    const auto& rows = by_card[c - 1];
    if (!cols.empty() && rows.empty())
      throw std::invalid_argument("reduced_homology_dims: face set not closed under subsets");
    if (cols.empty()) continue;
    std::vector<std::vector<int>> mat(rows.size(), std::vector<int>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j) {
      int pos = 0;
      for (Subset rest = cols[j]; rest; rest &= rest - 1, ++pos) {
        const Subset facet = cols[j] & ~(rest & ~(rest - 1));
        auto it = index[c - 1].find(facet);
        if (it == index[c - 1].end())
          throw std::invalid_argument("reduced_homology_dims: face set not closed under subsets");
        mat[static_cast<std::size_t>(it->second)][j] = (pos % 2 == 0) ? 1 : -1;
      }
    }
    boundary_rank[c] = matrix_rank(mat, field);
  }

  for (std::size_t c = 0; c < by_card.size(); ++c) {
    const int f_c = static_cast<int>(by_card[c].size());
    const int h = f_c - boundary_rank[c] - boundary_rank[c + 1];
    if (h != 0) result[static_cast<int>(c) - 1] = h;
  }
  return result;
}

}  // namespace sqfpow

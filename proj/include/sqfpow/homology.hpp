#ifndef SQFPOW_HOMOLOGY_HPP
#define SQFPOW_HOMOLOGY_HPP

#include <map>
#include <vector>

#include "sqfpow/field.hpp"
#include "sqfpow/subsets.hpp"

namespace sqfpow {

// Reduced simplicial homology dimensions over the given field.
//
// `faces` must list every face of the complex, including the empty face 0
// whenever the complex is non-void; it must be closed under subsets. The
// void complex (no faces at all) has no homology anywhere; the irrelevant
// complex {0} has dim H~_{-1} = 1. Returns only the nonzero dimensions,
// keyed by face dimension d (d = |F| - 1, so the empty face has d = -1).
std::map<int, int> reduced_homology_dims(const std::vector<Subset>& faces,
                                         const FieldSpec& field);

}  // namespace sqfpow

#endif

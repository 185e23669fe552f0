#pragma once

#include <string>

#include "halfshift/double_partition.hpp"
#include "halfshift/grassmannian.hpp"

namespace halfshift {

// Fixed-width text rendering of the half-shifted diagram: top block, shifted
// bottom block inside its staircase, related columns marked R, removable
// boxes marked *, followed by the column lengths, the permutation, the
// row-reading word and the per-box roots.
std::string render_diagram(const GrassmannianSpec& spec,
                           const DoublePartition& p);

}  // namespace halfshift

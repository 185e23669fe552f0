#pragma once

#include <vector>

#include "halfshift/double_partition.hpp"
#include "halfshift/grassmannian.hpp"
#include "halfshift/root.hpp"

namespace halfshift {

// One diagram box with the inversion it carries.
struct BoxRoot {
  bool top = false;  // box of the alpha rectangle vs the shifted lambda part
  int i = 0, j = 0;  // matrix coordinates within its block
  Root root;
};

// Fills every box of the half-shifted diagram with a positive root so that
// the multiset of filled roots equals the inversion set of the cell's
// permutation. Top boxes carry e_{w(k-i+1)} - e_{w(k+j)}; bottom boxes carry
// -e_{wl(i)) - e_{wl(j)} where wl is w reordered increasingly (halved on the
// diagonal for family B; for family D types 1/2 the first entry of w is
// unbarred first).
std::vector<BoxRoot> fill_diagram_roots(const GrassmannianSpec& spec,
                                        const DoublePartition& p);

}  // namespace halfshift

#pragma once

#include <ostream>
#include <utility>
#include <vector>

#include "halfshift/diagram.hpp"
#include "halfshift/double_partition.hpp"
#include "halfshift/grassmannian.hpp"
#include "halfshift/weyl.hpp"

namespace halfshift {

// All Schubert cells of the spec, sorted by (dimension, alpha, lambda, dtype).
std::vector<DoublePartition> enumerate_cells(const GrassmannianSpec& spec);

// Cells regrouped per dimension d = 0..top.
std::vector<std::vector<DoublePartition>> cells_by_dimension(
    const GrassmannianSpec& spec);

// The barred permutation of the cell, built from the related/non-related
// column lengths of its half-shifted diagram. Throws on invalid cells.
SignedPermutation partition_to_permutation(const GrassmannianSpec& spec,
                                           const DoublePartition& p);

// Inverse of partition_to_permutation; throws when w is not a minimal
// representative of the spec.
DoublePartition permutation_to_partition(const GrassmannianSpec& spec,
                                         const SignedPermutation& w);

bool is_minimal_representative(const GrassmannianSpec& spec,
                               const SignedPermutation& w);

// Reduced word read off the diagram: bottom block first, boxes right to left
// from the bottom row up, then the top block the same way.
ReducedWord row_reading_word(const GrassmannianSpec& spec,
                             const DoublePartition& p);

// Column counts of alpha, one entry per rectangle column.
std::vector<int> transpose_alpha(const GrassmannianSpec& spec,
                                 const DoublePartition& p);

// One box removed from the end of a row of alpha or lambda.
struct Removal {
  enum class Kind { Alpha, Lambda };
  enum class Sub { None, Diagonal, Related, NonRelated };

  Kind kind = Kind::Alpha;
  int t = 0;        // row the box is removed from
  Sub sub = Sub::None;
  int index = 0;    // p for Related, q for NonRelated
  int dtype_from = -1, dtype_to = -1;  // family D bookkeeping

  std::string describe() const;
};

// Every valid one-box removal together with the resulting cell. For family D
// the results carry the type transitions, and removals whose target is not a
// cell (possible at k <= 1) are dropped.
std::vector<std::pair<Removal, DoublePartition>> enumerate_removals(
    const GrassmannianSpec& spec, const DoublePartition& p);

// All cells covered by p in the Bruhat order, with the covering root:
// q = s_beta * w_p of length one less. Box removals are always coverings,
// but not conversely; the extra pairs rearrange both partitions at once.
std::vector<std::pair<DoublePartition, Root>> enumerate_coverings(
    const GrassmannianSpec& spec, const DoublePartition& p);

}  // namespace halfshift

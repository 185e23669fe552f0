#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "halfshift/double_partition.hpp"
#include "halfshift/grassmannian.hpp"
#include "halfshift/shapes.hpp"
#include "halfshift/smith.hpp"

namespace halfshift {

inline constexpr std::size_t kDefaultCellCap = 5000;

class CellCapExceeded : public std::runtime_error {
 public:
  CellCapExceeded(long long cells, std::size_t cap);
  long long cells;
  std::size_t cap;
};

// Boundary matrix from dimension d to d-1, sparse triplets; rows index the
// (d-1)-cells, columns the d-cells, in enumeration order.
struct BoundaryMatrix {
  int d = 0;
  int rows = 0, cols = 0;
  std::vector<Triplet> entries;
};

struct ChainComplex {
  GrassmannianSpec spec;
  std::vector<std::vector<DoublePartition>> cells;  // per dimension
  std::vector<BoundaryMatrix> boundaries;           // boundaries[d] maps d -> d-1

  int top_dimension() const { return static_cast<int>(cells.size()) - 1; }
  std::size_t total_cells() const;
};

struct HomologyGroup {
  int degree = 0;
  long long betti = 0;
  std::vector<long long> torsion;  // invariant factors > 1, each a power of 2

  bool operator==(const HomologyGroup& rhs) const {
    return degree == rhs.degree && betti == rhs.betti && torsion == rhs.torsion;
  }
};

// Assembles the graded integer complex over every covering pair of cells:
// closed-form kappa on box removals, the inversion-sum ratio on the other
// coverings, signs seeded from the row-reading words and then re-solved
// over the length-two Bruhat diamonds. boundary-squared = 0 is verified
// before returning. Throws CellCapExceeded past the cap.
ChainComplex build_complex(const GrassmannianSpec& spec,
                           std::size_t cell_cap = kDefaultCellCap);

// Same complex with the sign seeds recomputed from seeded random reduced
// words instead of the row-reading words; the homology must not change.
ChainComplex build_complex_randomized(const GrassmannianSpec& spec,
                                      unsigned seed,
                                      std::size_t cell_cap = kDefaultCellCap);

// H_d = ker boundary_d / im boundary_{d+1} via Smith normal form. Aborts
// with std::logic_error if any torsion factor is not a power of 2.
std::vector<HomologyGroup> homology(const ChainComplex& complex);
std::vector<HomologyGroup> homology(const GrassmannianSpec& spec,
                                    std::size_t cell_cap = kDefaultCellCap);

}  // namespace halfshift

#pragma once

#include <vector>

#include "halfshift/double_partition.hpp"
#include "halfshift/grassmannian.hpp"

namespace halfshift {

// Geometry of the half-shifted diagram: the top rectangle holds alpha left
// justified; row i of lambda is shifted right by i-1 (B/C) or i (D) units
// inside a staircase whose column j holds j cells. The length of a column
// is its number of blank staircase cells; the columns hit by the diagonal
// drawn from the end of each top row are the related ones and recover the
// u_p, the rest recover the v_q.
struct Diagram {
  GrassmannianSpec spec;
  DoublePartition part;

  std::vector<int> blank;        // blank[j-1] = blanks of column j
  std::vector<int> related_col;  // related_col[i-1] = column of top row i
  std::vector<int> u;            // u[p-1] = u_p  (u_k < ... < u_1)
  std::vector<int> v;            // v[q-1] = v_q, descending; for family D of
                                 // type 2 the final slot is the bare -1

  static Diagram build(const GrassmannianSpec& spec, const DoublePartition& p);

  // First/last occupied column of bottom row i (1-based; row must exist).
  int bottom_start(int i) const {
    return spec.family == Family::D ? i + 1 : i;
  }
  int bottom_end(int i) const { return bottom_start(i) + part.lambda[i - 1] - 1; }

  // Family D: whether the staircase diagonal cell (i,i) is marked filled.
  bool diagonal_filled(int i) const;

  bool is_related(int col) const;
  // Index p with related_col[p-1] == col (1-based), or 0.
  int related_index(int col) const;

  // Index p with u_p == value, or 0.
  int find_u(int value) const;
  // Index q with |v_q| == value, or 0.
  int find_v(int value) const;
};

}  // namespace halfshift

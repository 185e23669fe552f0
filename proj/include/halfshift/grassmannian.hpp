#pragma once

#include <string>

#include "halfshift/family.hpp"

namespace halfshift {

// Flag manifold G/P obtained by deleting the simple root alpha_k:
//   B: OG(n-k, 2n+1),  C: IG(n-k, 2n),  D: OG(n+1-k, 2n+2).
struct GrassmannianSpec {
  Family family = Family::C;
  int n = 1;
  int k = 0;

  void validate() const;  // throws std::invalid_argument

  int letters() const { return halfshift::letters(family, n); }

  // Top rectangle holding alpha: k rows, n-k (B/C) or n+1-k (D) columns.
  int alpha_rows() const { return k; }
  int alpha_cols() const { return family == Family::D ? n + 1 - k : n - k; }

  // Columns of the bottom staircase (column j holds j cells).
  int staircase_cols() const { return letters(); }

  std::string manifold_name() const;

  // |W| / |W_Theta|, the number of Schubert cells.
  long long expected_cell_count() const;

  bool operator==(const GrassmannianSpec& rhs) const {
    return family == rhs.family && n == rhs.n && k == rhs.k;
  }
};

}  // namespace halfshift

#include "halfshift/diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace halfshift {

bool Diagram::diagonal_filled(int i) const {
  if (spec.family != Family::D) return false;
  if (i <= part.rows()) return true;
  return i == part.rows() + 1 && part.dtype == 2;
}

Diagram Diagram::build(const GrassmannianSpec& spec, const DoublePartition& p) {
  validate_shape(spec, p);
  Diagram d;
  d.spec = spec;
  d.part = p;
  const int cols = spec.staircase_cols();
  const int r = p.rows();

  // Column j holds j staircase cells (rows 1..j); count the ones covered by
  // a lambda row, plus the marked diagonal cell (j,j) for family D. Lambda
  // rows never reach their own diagonal cell in family D (shift is i), so
  // there is no double count.
  d.blank.assign(cols, 0);
  for (int j = 1; j <= cols; ++j) {
    int filled = 0;
    for (int i = 1; i <= std::min(j, r); ++i)
      if (j >= d.bottom_start(i) && j <= d.bottom_end(i)) ++filled;
    if (spec.family == Family::D && d.diagonal_filled(j)) ++filled;
    d.blank[j - 1] = j - filled;
  }

  d.related_col.resize(spec.k);
  d.u.resize(spec.k);
  for (int i = 1; i <= spec.k; ++i) {
    const int col = p.alpha_part(i) + spec.k - i + 1;
    if (col < 1 || col > cols)
      throw std::logic_error("related column out of the staircase");
    d.related_col[i - 1] = col;
    d.u[i - 1] = d.blank[col - 1];
  }

  for (int j = cols; j >= 1; --j) {
    if (d.is_related(j)) continue;
    if (d.blank[j - 1] > 0) d.v.push_back(d.blank[j - 1]);
  }
  std::sort(d.v.begin(), d.v.end(), std::greater<int>());
  if (spec.family == Family::D && p.dtype == 2) d.v.push_back(-1);
  return d;
}

bool Diagram::is_related(int col) const {
  return std::find(related_col.begin(), related_col.end(), col) !=
         related_col.end();
}

int Diagram::related_index(int col) const {
  for (size_t i = 0; i < related_col.size(); ++i)
    if (related_col[i] == col) return static_cast<int>(i) + 1;
  return 0;
}

int Diagram::find_u(int value) const {
  for (size_t i = 0; i < u.size(); ++i)
    if (u[i] == value) return static_cast<int>(i) + 1;
  return 0;
}

int Diagram::find_v(int value) const {
  for (size_t i = 0; i < v.size(); ++i)
    if (std::abs(v[i]) == value) return static_cast<int>(i) + 1;
  return 0;
}

}  // namespace halfshift

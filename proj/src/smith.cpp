#include "halfshift/smith.hpp"

#include <algorithm>
#include <stdexcept>

namespace halfshift {

namespace {

using Matrix = std::vector<std::vector<BigInt>>;

BigInt abs_val(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Quotient with symmetric remainder: |a - q*b| <= |b|/2. Keeps the entry
// swell of the elimination under control.
BigInt div_nearest(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  BigInt r = a - q * b;
  if (2 * abs_val(r) > abs_val(b)) q += ((r < 0) == (b < 0)) ? 1 : -1;
  return q;
}

// Position of a nonzero entry with minimal |value| in the trailing
// submatrix, or {-1,-1}.
std::pair<int, int> min_pivot(const Matrix& m, int from) {
  std::pair<int, int> best{-1, -1};
  BigInt best_abs = 0;
  for (int i = from; i < static_cast<int>(m.size()); ++i)
    for (int j = from; j < static_cast<int>(m[i].size()); ++j) {
      if (m[i][j] == 0) continue;
      BigInt a = abs_val(m[i][j]);
      if (best.first < 0 || a < best_abs) {
        best = {i, j};
        best_abs = a;
        if (best_abs == 1) return best;
      }
    }
  return best;
}

void enforce_divisibility_chain(std::vector<BigInt>& factors) {
  for (size_t i = 0; i < factors.size(); ++i)
    for (size_t j = i + 1; j < factors.size(); ++j) {
      BigInt& a = factors[i];
      BigInt& b = factors[j];
      if (b % a != 0) {
        BigInt g = gcd(a, b);
        b = a / g * b;
        a = g;
      }
    }
  std::sort(factors.begin(), factors.end());
}

}  // namespace

SmithResult smith_normal_form(int rows, int cols,
                              const std::vector<Triplet>& entries) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimensions");
  Matrix m(rows, std::vector<BigInt>(cols, 0));
  for (const Triplet& t : entries) {
    if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
      throw std::invalid_argument("triplet out of range");
    m[t.row][t.col] += t.value;
  }

  const int bound = std::min(rows, cols);
  int p = 0;
  while (p < bound) {
    // Re-pick the globally smallest entry before every operation; with
    // nearest-quotient reductions this keeps intermediate values small.
    auto [bi, bj] = min_pivot(m, p);
    if (bi < 0) break;
    std::swap(m[p], m[bi]);
    if (bj != p)
      for (auto& row : m) std::swap(row[p], row[bj]);

    // One reduction step against a cross entry the pivot does not divide,
    // then reconsider the pivot choice.
    bool stepped = false;
    for (int i = p + 1; i < rows && !stepped; ++i)
      if (m[i][p] % m[p][p] != 0) {
        BigInt q = div_nearest(m[i][p], m[p][p]);
        for (int j = p; j < cols; ++j) m[i][j] -= q * m[p][j];
        stepped = true;
      }
    for (int j = p + 1; j < cols && !stepped; ++j)
      if (m[p][j] % m[p][p] != 0) {
        BigInt q = div_nearest(m[p][j], m[p][p]);
        for (int i = p; i < rows; ++i) m[i][j] -= q * m[i][p];
        stepped = true;
      }
    if (stepped) continue;

    // The pivot divides its whole cross: clear it in one exact pass.
    for (int i = p + 1; i < rows; ++i) {
      if (m[i][p] == 0) continue;
      BigInt q = m[i][p] / m[p][p];
      for (int j = p; j < cols; ++j) m[i][j] -= q * m[p][j];
    }
    for (int j = p + 1; j < cols; ++j) {
      if (m[p][j] == 0) continue;
      BigInt q = m[p][j] / m[p][p];
      for (int i = p; i < rows; ++i) m[i][j] -= q * m[i][p];
    }

    // The pivot must also divide the rest; fold one offending row in and
    // keep working, otherwise this stage is finished.
    bool fixed = false;
    for (int i = p + 1; i < rows && !fixed; ++i)
      for (int j = p + 1; j < cols && !fixed; ++j)
        if (m[i][j] % m[p][p] != 0) {
          for (int c = p; c < cols; ++c) m[p][c] += m[i][c];
          fixed = true;
        }
    if (!fixed) ++p;
  }

  SmithResult res;
  res.rank = p;
  for (int i = 0; i < p; ++i) res.invariant_factors.push_back(abs_val(m[i][i]));
  enforce_divisibility_chain(res.invariant_factors);
  return res;
}

}  // namespace halfshift

#include "oracles.hpp"

#include <algorithm>
#include <deque>

#include "halfshift/weyl.hpp"

namespace halfshift::test {

std::map<SignedPermutation, int> bfs_group(Family f, int n) {
  std::map<SignedPermutation, int> depth;
  std::deque<SignedPermutation> queue;
  SignedPermutation id = SignedPermutation::identity(f, n);
  depth.emplace(id, 0);
  queue.push_back(id);
  while (!queue.empty()) {
    SignedPermutation w = queue.front();
    queue.pop_front();
    const int d = depth.at(w);
    for (int i = 0; i < w.num_generators(); ++i) {
      SignedPermutation next = w.apply_generator(i);
      if (depth.emplace(next, d + 1).second) queue.push_back(next);
    }
  }
  return depth;
}

std::vector<SignedPermutation> minimal_representatives_bruteforce(
    const GrassmannianSpec& spec) {
  std::vector<SignedPermutation> out;
  for (const auto& [w, len] : bfs_group(spec.family, spec.n)) {
    bool minimal = true;
    for (int i = 0; i < w.num_generators() && minimal; ++i) {
      if (i == spec.k) continue;
      if (w.right_descent(i)) minimal = false;
    }
    if (minimal) out.push_back(w);
  }
  return out;
}

namespace {

using Matrix = std::vector<std::vector<BigInt>>;

BigInt abs_val(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

BigInt div_nearest(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  BigInt r = a - q * b;
  if (2 * abs_val(r) > abs_val(b)) q += ((r < 0) == (b < 0)) ? 1 : -1;
  return q;
}

// First nonzero entry of the trailing submatrix in row-major order.
std::pair<int, int> first_nonzero(const Matrix& m, int from) {
  for (int i = from; i < static_cast<int>(m.size()); ++i)
    for (int j = from; j < static_cast<int>(m[i].size()); ++j)
      if (m[i][j] != 0) return {i, j};
  return {-1, -1};
}

}  // namespace

// Textbook elimination, deliberately different pivoting from the library
// routine: take the first nonzero entry, Euclid it against its cross with
// nearest quotients (the remainder replaces the pivot), clear, and repeat.
SmithResult naive_smith(int rows, int cols,
                        const std::vector<Triplet>& entries) {
  Matrix m(rows, std::vector<BigInt>(cols, 0));
  for (const Triplet& t : entries) m[t.row][t.col] += t.value;

  const int bound = std::min(rows, cols);
  int p = 0;
  while (p < bound) {
    auto [bi, bj] = first_nonzero(m, p);
    if (bi < 0) break;
    std::swap(m[p], m[bi]);
    if (bj != p)
      for (auto& row : m) std::swap(row[p], row[bj]);

    bool stepped = false;
    for (int i = p + 1; i < rows && !stepped; ++i)
      if (m[i][p] % m[p][p] != 0) {
        BigInt q = div_nearest(m[i][p], m[p][p]);
        for (int j = p; j < cols; ++j) m[i][j] -= q * m[p][j];
        std::swap(m[p], m[i]);  // remainder becomes the new pivot
        stepped = true;
      }
    for (int j = p + 1; j < cols && !stepped; ++j)
      if (m[p][j] % m[p][p] != 0) {
        BigInt q = div_nearest(m[p][j], m[p][p]);
        for (int i = p; i < rows; ++i) m[i][j] -= q * m[i][p];
        for (auto& row : m) std::swap(row[p], row[j]);
        stepped = true;
      }
    if (stepped) continue;

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
  for (int i = 0; i < p; ++i) {
    BigInt d = m[i][i];
    res.invariant_factors.push_back(d < 0 ? BigInt(-d) : d);
  }
  for (size_t i = 0; i < res.invariant_factors.size(); ++i)
    for (size_t j = i + 1; j < res.invariant_factors.size(); ++j) {
      BigInt& a = res.invariant_factors[i];
      BigInt& b = res.invariant_factors[j];
      if (b % a != 0) {
        BigInt g = gcd(a, b);
        b = a / g * b;
        a = g;
      }
    }
  std::sort(res.invariant_factors.begin(), res.invariant_factors.end());
  return res;
}

std::vector<Triplet> random_sparse_pm2(int rows, int cols, double density,
                                       std::mt19937& rng) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<Triplet> out;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (coin(rng) < density)
        out.push_back({i, j, sign(rng) ? 2LL : -2LL});
  return out;
}

}  // namespace halfshift::test

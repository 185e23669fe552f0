#include "halfshift/shapes.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace halfshift {

namespace {

// One-line notation from the column lengths, before the family D sign fix.
std::vector<int> assemble_values(const GrassmannianSpec& spec,
                                 const DoublePartition& p, const Diagram& d) {
  const bool isD = spec.family == Family::D;
  std::vector<int> vals;
  vals.reserve(spec.letters());
  for (int i = spec.k; i >= 1; --i) vals.push_back(d.u[i - 1]);
  for (int j = 0; j < p.rows(); ++j)
    vals.push_back(isD ? -(p.lambda[j] + 1) : -p.lambda[j]);
  for (auto it = d.v.rbegin(); it != d.v.rend(); ++it) vals.push_back(*it);
  if (static_cast<int>(vals.size()) != spec.letters())
    throw std::logic_error("diagram produced the wrong number of entries");
  return vals;
}

}  // namespace

bool is_minimal_representative(const GrassmannianSpec& spec,
                               const SignedPermutation& w) {
  for (int i = 0; i < w.num_generators(); ++i)
    if (i != spec.k && w.right_descent(i)) return false;
  return true;
}

SignedPermutation partition_to_permutation(const GrassmannianSpec& spec,
                                           const DoublePartition& p) {
  const Diagram d = Diagram::build(spec, p);
  std::vector<int> vals = assemble_values(spec, p, d);
  if (spec.family == Family::D) {
    int bars = 0;
    for (int x : vals)
      if (x < 0) ++bars;
    if (bars % 2 != 0) vals[0] = -vals[0];
  }
  SignedPermutation w(spec.family, spec.n, std::move(vals));
  if (!is_minimal_representative(spec, w)) {
    // Only reachable for family D with k <= 1, where some shapes fail.
    throw std::invalid_argument("partition does not index a Schubert cell: " +
                                p.display());
  }
  return w;
}

DoublePartition permutation_to_partition(const GrassmannianSpec& spec,
                                         const SignedPermutation& w) {
  spec.validate();
  if (w.family() != spec.family || w.n() != spec.n)
    throw std::invalid_argument("permutation does not match the spec");
  if (!is_minimal_representative(spec, w))
    throw std::invalid_argument("not a minimal coset representative");
  const bool isD = spec.family == Family::D;
  const int k = spec.k;
  const int L = spec.letters();

  // The lambda block is the run of entries <= -1 (B/C) or <= -2 (D) right
  // after the k-entry u block.
  std::vector<int> lambda;
  for (int pos = k + 1; pos <= L; ++pos) {
    const int val = w.value(pos);
    if (val > (isD ? -2 : -1)) break;
    lambda.push_back(isD ? -val - 1 : -val);
  }
  const int r = static_cast<int>(lambda.size());

  std::vector<int> alpha;
  for (int i = 1; i <= k; ++i) {
    const int u_i = std::abs(w.value(k - i + 1));
    int d_i = 0;
    for (int l : lambda)
      if ((isD ? l + 1 : l) > u_i) ++d_i;
    alpha.push_back(u_i + i - k - 1 + d_i);
  }

  int dtype = -1;
  if (isD) {
    if (k >= 1 && std::abs(w.value(1)) == 1) {
      dtype = 0;
    } else {
      // The distinguished +-1 entry sits in the v block and decides the type.
      const int pos = k + r + 1;
      if (pos > L || std::abs(w.value(pos)) != 1)
        throw std::invalid_argument("permutation is not of the expected form");
      dtype = w.value(pos) > 0 ? 1 : 2;
    }
  }
  DoublePartition p(std::move(alpha), std::move(lambda), dtype);

  // Round-trip check doubles as full validation of the block structure.
  validate_shape(spec, p);
  if (!(partition_to_permutation(spec, p) == w))
    throw std::invalid_argument("permutation is not of the expected form");
  return p;
}

ReducedWord row_reading_word(const GrassmannianSpec& spec,
                             const DoublePartition& p) {
  validate_shape(spec, p);
  const bool isD = spec.family == Family::D;
  const int k = spec.k, r = p.rows(), dt = p.dtype;
  ReducedWord word;

  // Bottom block, boxes right to left, bottom row to top. (i,j) are the
  // staircase coordinates of the box.
  for (int i = r; i >= 1; --i) {
    const int start = isD ? i + 1 : i;
    for (int j = start + p.lambda[i - 1] - 1; j >= start; --j) {
      int letter;
      if (!isD) {
        letter = j - i;
      } else if (j > i + 1) {
        letter = j - i;
      } else {  // first box of the row
        const int parity = (dt == 0) ? i : i + r + dt;
        letter = (parity % 2 != 0) ? (dt == 0 ? 0 : 1) : (dt == 0 ? 1 : 0);
      }
      word.push_back(letter);
    }
  }

  // Top block the same way; rectangle coordinates.
  for (int i = k; i >= 1; --i) {
    for (int j = p.alpha_part(i); j >= 1; --j) {
      int letter = j - i + k;
      if (isD && dt != 0 && i == k && j == 1)
        letter = ((r + dt) % 2 != 0) ? 1 : 0;
      word.push_back(letter);
    }
  }
  return word;
}

std::vector<int> transpose_alpha(const GrassmannianSpec& spec,
                                 const DoublePartition& p) {
  validate_shape(spec, p);
  std::vector<int> out(spec.alpha_cols(), 0);
  for (int i = 1; i <= spec.alpha_cols(); ++i)
    for (int a : p.alpha)
      if (a >= i) ++out[i - 1];
  return out;
}

std::vector<DoublePartition> enumerate_cells(const GrassmannianSpec& spec) {
  spec.validate();
  const bool isD = spec.family == Family::D;
  std::vector<DoublePartition> cells;

  std::vector<int> alpha;
  std::vector<int> lambda;

  auto emit = [&]() {
    const int r = static_cast<int>(lambda.size());
    std::vector<int> dtypes;
    if (!isD) {
      dtypes = {-1};
    } else if (spec.k == 0) {
      dtypes = {r % 2 == 0 ? 1 : 2};
    } else if ((alpha.empty() ? 0 : alpha[spec.k - 1]) == r) {
      dtypes = {0};
    } else {
      dtypes = {1, 2};
    }
    for (int dt : dtypes) {
      DoublePartition p(alpha, lambda, dt);
      if (isD && spec.k <= 1 && !is_cell(spec, p)) continue;
      cells.push_back(std::move(p));
    }
  };

  auto gen_lambda = [&](auto&& self, int max_part, int remaining_rows) -> void {
    emit();
    if (remaining_rows == 0) return;
    for (int part = max_part; part >= 1; --part) {
      lambda.push_back(part);
      self(self, part - 1, remaining_rows - 1);
      lambda.pop_back();
    }
  };

  auto gen_alpha = [&](auto&& self, int row, int max_part) -> void {
    if (row > spec.k) {
      // len(lambda) <= alpha_k when k >= 1; unconstrained at k = 0.
      const int max_rows = spec.k == 0 ? spec.n : alpha[spec.k - 1];
      gen_lambda(gen_lambda, spec.n, max_rows);
      return;
    }
    for (int part = max_part; part >= 0; --part) {
      alpha.push_back(part);
      self(self, row + 1, part);
      alpha.pop_back();
    }
  };
  gen_alpha(gen_alpha, 1, spec.alpha_cols());

  std::sort(cells.begin(), cells.end(),
            [](const DoublePartition& a, const DoublePartition& b) {
              if (a.weight() != b.weight()) return a.weight() < b.weight();
              return a < b;
            });
  return cells;
}

std::vector<std::vector<DoublePartition>> cells_by_dimension(
    const GrassmannianSpec& spec) {
  std::vector<DoublePartition> all = enumerate_cells(spec);
  const int top = all.empty() ? 0 : all.back().weight();
  std::vector<std::vector<DoublePartition>> by_dim(top + 1);
  for (auto& p : all) by_dim[p.weight()].push_back(std::move(p));
  return by_dim;
}

std::string Removal::describe() const {
  std::ostringstream out;
  out << (kind == Kind::Alpha ? "alpha-removing" : "lambda-removing")
      << " t=" << t;
  switch (sub) {
    case Sub::None: break;
    case Sub::Diagonal: out << " diagonal"; break;
    case Sub::Related: out << " related p=" << index; break;
    case Sub::NonRelated: out << " non-related q=" << index; break;
  }
  if (dtype_from >= 0 && dtype_from != dtype_to)
    out << " (type " << dtype_from << " -> " << dtype_to << ")";
  return out.str();
}

std::vector<std::pair<DoublePartition, Root>> enumerate_coverings(
    const GrassmannianSpec& spec, const DoublePartition& p) {
  const SignedPermutation w = partition_to_permutation(spec, p);
  const int target = length(w) - 1;
  std::vector<std::pair<DoublePartition, Root>> out;
  for (const Root& beta : positive_roots(spec.family, spec.n)) {
    const SignedPermutation w2 = reflection(spec.family, spec.n, beta) * w;
    if (length(w2) != target) continue;
    if (!is_minimal_representative(spec, w2)) continue;
    out.emplace_back(permutation_to_partition(spec, w2), beta);
  }
  return out;
}

std::vector<std::pair<Removal, DoublePartition>> enumerate_removals(
    const GrassmannianSpec& spec, const DoublePartition& p) {
  validate_shape(spec, p);
  const bool isD = spec.family == Family::D;
  const Diagram d = Diagram::build(spec, p);
  const int k = spec.k, r = p.rows();
  std::vector<std::pair<Removal, DoublePartition>> out;

  auto keep = [&](Removal rem, DoublePartition q) {
    if (isD && spec.k <= 1 && !is_cell(spec, q)) return;
    out.emplace_back(rem, std::move(q));
  };

  for (int t = 1; t <= k; ++t) {
    const int a_t = p.alpha_part(t);
    if (a_t == 0) continue;
    if (t < k && a_t - 1 < p.alpha_part(t + 1)) continue;
    if (t == k && a_t - 1 < r) continue;
    std::vector<int> alpha = p.alpha;
    alpha[t - 1] -= 1;
    int dt = p.dtype;
    if (isD && t == k && a_t == r + 1) dt = 0;
    Removal rem;
    rem.kind = Removal::Kind::Alpha;
    rem.t = t;
    rem.dtype_from = p.dtype;
    rem.dtype_to = dt;
    keep(rem, DoublePartition(std::move(alpha), p.lambda, dt));
  }

  for (int t = 1; t <= r; ++t) {
    const int l_t = p.lambda[t - 1];
    if (t < r && l_t - 1 <= p.lambda[t]) continue;
    std::vector<int> lambda = p.lambda;
    if (l_t == 1)
      lambda.pop_back();  // strictness forces t == r here
    else
      lambda[t - 1] -= 1;

    Removal rem;
    rem.kind = Removal::Kind::Lambda;
    rem.t = t;
    rem.dtype_from = p.dtype;
    int dt = p.dtype;

    const int freed = isD ? l_t : l_t - 1;
    if (!isD && freed == 0) {
      rem.sub = Removal::Sub::Diagonal;
    } else if (int pp = d.find_u(freed); pp != 0) {
      rem.sub = Removal::Sub::Related;
      rem.index = pp;
      if (isD && l_t == 1) dt = (r % 2 == 0) ? 2 : 1;  // type 0 drops its row
    } else if (int qq = d.find_v(freed); qq != 0) {
      rem.sub = Removal::Sub::NonRelated;
      rem.index = qq;
      if (isD && l_t == 1) dt = 3 - dt;  // types 1 and 2 swap
    } else {
      throw std::logic_error("removed box matches neither u nor v");
    }
    rem.dtype_to = dt;
    keep(rem, DoublePartition(p.alpha, std::move(lambda), dt));
  }
  return out;
}

}  // namespace halfshift

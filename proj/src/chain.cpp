#include "halfshift/chain.hpp"

#include <functional>
#include <map>
#include <memory>
#include <random>
#include <sstream>

#include "halfshift/boundary.hpp"
#include "halfshift/weyl.hpp"

namespace halfshift {

CellCapExceeded::CellCapExceeded(long long cells_, std::size_t cap_)
    : std::runtime_error("cell count " + std::to_string(cells_) +
                         " exceeds the cap " + std::to_string(cap_)),
      cells(cells_),
      cap(cap_) {}

std::size_t ChainComplex::total_cells() const {
  std::size_t total = 0;
  for (const auto& dim : cells) total += dim.size();
  return total;
}

namespace {

// Union-find with parity: find() returns (root, twist relative to root).
struct ParityDsu {
  std::vector<int> parent;
  std::vector<unsigned char> twist;

  explicit ParityDsu(size_t n) : parent(n), twist(n, 0) {
    for (size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  std::pair<int, int> find(int x) {
    if (parent[x] == x) return {x, 0};
    auto [root, t] = find(parent[x]);
    parent[x] = root;
    twist[x] ^= t;
    return {root, twist[x]};
  }
  // Requires twist(a) xor twist(b) == rel; returns false on conflict.
  bool join(int a, int b, int rel) {
    auto [ra, ta] = find(a);
    auto [rb, tb] = find(b);
    if (ra == rb) return (ta ^ tb) == rel;
    parent[ra] = rb;
    twist[ra] = static_cast<unsigned char>(ta ^ tb ^ rel);
    return true;
  }
};

void verify_boundary_squared(const ChainComplex& cx) {
  for (size_t d = 2; d < cx.cells.size(); ++d) {
    const BoundaryMatrix& hi = cx.boundaries[d];
    const BoundaryMatrix& lo = cx.boundaries[d - 1];
    std::vector<std::vector<std::pair<int, long long>>> lo_cols(lo.cols);
    for (const Triplet& t : lo.entries)
      lo_cols[t.col].push_back({t.row, t.value});
    std::vector<std::map<int, long long>> acc(hi.cols);
    for (const Triplet& t : hi.entries)
      for (const auto& [r, v] : lo_cols[t.row]) acc[t.col][r] += t.value * v;
    for (const auto& col : acc)
      for (const auto& [r, v] : col)
        if (v != 0) throw std::logic_error("boundary squared is nonzero");
  }
}

// The deleted-letter sign convention is not globally coherent: around a
// length-two Bruhat interval (always a diamond: exactly two intermediate
// cells) the four word-convention signs can fail to cancel, and then no
// cell-by-cell re-orientation repairs the square of the boundary. The
// magnitudes are pinned by the kappa parity; the signs are solved level by
// level. All constraints tie two entries of one column of the upper matrix
// (the lower matrix is already final), so a parity union-find per matrix
// settles them; entries left free keep their word-convention default.
void make_coherent(ChainComplex& cx) {
  for (size_t d = 2; d < cx.cells.size(); ++d) {
    BoundaryMatrix& hi = cx.boundaries[d];
    const BoundaryMatrix& lo = cx.boundaries[d - 1];
    std::vector<std::vector<std::pair<int, long long>>> lo_cols(lo.cols);
    for (const Triplet& t : lo.entries)
      lo_cols[t.col].push_back({t.row, t.value});

    // Diamonds keyed by (top column w, bottom row x); each holds the hi
    // entry index and the sign of its path product.
    std::map<std::pair<int, int>, std::vector<std::pair<size_t, int>>> middles;
    for (size_t e = 0; e < hi.entries.size(); ++e)
      for (const auto& [x, v] : lo_cols[hi.entries[e].row])
        middles[{hi.entries[e].col, x}].push_back(
            {e, hi.entries[e].value * v > 0 ? 1 : -1});

    ParityDsu dsu(hi.entries.size());
    for (const auto& [wx, ms] : middles) {
      if (ms.size() == 1)
        throw std::logic_error(
            "single-path boundary composition cannot cancel; "
            "coefficient magnitudes are inconsistent");
      if (ms.size() > 2)
        throw std::logic_error("Bruhat interval of length two is not thin");
      // The two path products must cancel: flip exactly one entry when the
      // products currently agree.
      if (!dsu.join(static_cast<int>(ms[0].first),
                    static_cast<int>(ms[1].first),
                    ms[0].second == ms[1].second ? 1 : 0))
        throw std::logic_error("orientation constraints are inconsistent");
    }
    for (size_t e = 0; e < hi.entries.size(); ++e)
      if (dsu.find(static_cast<int>(e)).second)
        hi.entries[e].value = -hi.entries[e].value;
  }
}

// Shared assembly over every covering pair of cells. The per-cell reduced
// word supplies the sign exponent: the boundary root of a covering pair
// occurs exactly once in the word's beta sequence, and its position is the
// deleted-letter index. kappa comes from the closed-form table when the
// pair is a box removal and from the inversion-sum ratio otherwise.
ChainComplex assemble(const GrassmannianSpec& spec, std::size_t cell_cap,
                      const std::function<ReducedWord(
                          const DoublePartition&, const SignedPermutation&)>&
                          word_choice) {
  spec.validate();
  const long long expected = spec.expected_cell_count();
  if (expected > static_cast<long long>(cell_cap))
    throw CellCapExceeded(expected, cell_cap);

  ChainComplex cx;
  cx.spec = spec;
  cx.cells = cells_by_dimension(spec);

  std::vector<std::map<DoublePartition, int>> index(cx.cells.size());
  for (size_t d = 0; d < cx.cells.size(); ++d)
    for (size_t i = 0; i < cx.cells[d].size(); ++i)
      index[d][cx.cells[d][i]] = static_cast<int>(i);

  cx.boundaries.resize(cx.cells.size());
  for (size_t d = 1; d < cx.cells.size(); ++d) {
    BoundaryMatrix& b = cx.boundaries[d];
    b.d = static_cast<int>(d);
    b.rows = static_cast<int>(cx.cells[d - 1].size());
    b.cols = static_cast<int>(cx.cells[d].size());
    for (size_t col = 0; col < cx.cells[d].size(); ++col) {
      const DoublePartition& cell = cx.cells[d][col];
      const SignedPermutation w = partition_to_permutation(spec, cell);
      const Root phi_w = inversion_sum(w);

      std::map<DoublePartition, int> removal_kappa;
      for (const auto& [rem, result] : enumerate_removals(spec, cell))
        removal_kappa[result] = kappa_closed_form(spec, cell, rem);

      std::vector<Root> betas;  // of the chosen word, built on demand
      for (const auto& [q, beta] : enumerate_coverings(spec, cell)) {
        int kappa;
        if (auto it = removal_kappa.find(q); it != removal_kappa.end()) {
          kappa = it->second;
        } else {
          const Root diff =
              phi_w - inversion_sum(partition_to_permutation(spec, q));
          kappa = 0;
          for (int i = 1; i <= diff.size(); ++i)
            if (beta.coeff(i) != 0) {
              kappa = diff.coeff(i) / beta.coeff(i);
              break;
            }
        }
        if (kappa % 2 != 0) continue;

        if (betas.empty())
          betas = beta_sequence(spec.family, spec.n, word_choice(cell, w));
        int position = 0;
        for (size_t i = 0; i < betas.size(); ++i)
          if (betas[i] == beta) {
            position = static_cast<int>(i) + 1;
            break;
          }
        if (position == 0)
          throw std::logic_error("covering root missing from beta sequence");
        b.entries.push_back({index[d - 1].at(q), static_cast<int>(col),
                             position % 2 != 0 ? -2LL : 2LL});
      }
    }
  }

  make_coherent(cx);
  verify_boundary_squared(cx);
  return cx;
}

}  // namespace

ChainComplex build_complex(const GrassmannianSpec& spec, std::size_t cell_cap) {
  return assemble(spec, cell_cap,
                  [&](const DoublePartition& cell, const SignedPermutation&) {
                    return row_reading_word(spec, cell);
                  });
}

ChainComplex build_complex_randomized(const GrassmannianSpec& spec,
                                      unsigned seed, std::size_t cell_cap) {
  auto rng = std::make_shared<std::mt19937>(seed);
  return assemble(spec, cell_cap,
                  [rng](const DoublePartition&, const SignedPermutation& w) {
                    return random_reduced_word(w, *rng);
                  });
}

std::vector<HomologyGroup> homology(const ChainComplex& cx) {
  const int top = cx.top_dimension();
  std::vector<int> rank(top + 2, 0);
  std::vector<std::vector<BigInt>> factors(top + 2);
  for (int d = 1; d <= top; ++d) {
    const BoundaryMatrix& b = cx.boundaries[d];
    SmithResult snf = smith_normal_form(b.rows, b.cols, b.entries);
    rank[d] = snf.rank;
    factors[d] = std::move(snf.invariant_factors);
  }

  std::vector<HomologyGroup> out;
  for (int d = 0; d <= top; ++d) {
    HomologyGroup g;
    g.degree = d;
    g.betti = static_cast<long long>(cx.cells[d].size()) - rank[d] - rank[d + 1];
    if (g.betti < 0)
      throw std::logic_error("negative betti number: boundary is not exact");
    for (const BigInt& f : factors[d + 1]) {
      if (f <= 1) continue;
      BigInt x = f;
      while (x % 2 == 0) x /= 2;
      if (x != 1)
        throw std::logic_error("torsion with an odd prime factor: " + f.str());
      g.torsion.push_back(f.convert_to<long long>());
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<HomologyGroup> homology(const GrassmannianSpec& spec,
                                    std::size_t cell_cap) {
  return homology(build_complex(spec, cell_cap));
}

}  // namespace halfshift

#include "halfshift/diagram_roots.hpp"

#include <algorithm>
#include <stdexcept>

#include "halfshift/shapes.hpp"

namespace halfshift {

std::vector<BoxRoot> fill_diagram_roots(const GrassmannianSpec& spec,
                                        const DoublePartition& p) {
  const SignedPermutation w = partition_to_permutation(spec, p);
  const int L = spec.letters();
  const bool isD = spec.family == Family::D;

  // Family D types 1/2 read the formulas through w with the first entry
  // unbarred; the reordering wl is the one-line sorted increasingly.
  std::vector<int> wv = w.values();
  if (isD && p.dtype != -1 && p.dtype != 0 && spec.k >= 1)
    wv[0] = std::abs(wv[0]);
  std::vector<int> wl = wv;
  std::sort(wl.begin(), wl.end());

  auto eps = [&](int a, int scale = 1) { return Root::epsilon(L, a, scale); };

  std::vector<BoxRoot> out;
  const int r = p.rows();
  const int shift = isD ? 1 : 0;
  for (int i = 1; i <= r; ++i) {
    for (int j = i + shift; j <= i + shift + p.lambda[i - 1] - 1; ++j) {
      Root root = -eps(wl[i - 1]) - eps(wl[j - 1]);
      if (spec.family == Family::B && i == j) root = -eps(wl[i - 1]);
      out.push_back({false, i, j, std::move(root)});
    }
  }
  for (int i = 1; i <= spec.k; ++i)
    for (int j = 1; j <= p.alpha_part(i); ++j)
      out.push_back(
          {true, i, j, eps(wv[spec.k - i]) - eps(wv[spec.k + j - 1])});
  return out;
}

}  // namespace halfshift

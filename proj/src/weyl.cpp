#include "halfshift/weyl.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace halfshift {

SignedPermutation evaluate_word(Family f, int n, std::span<const int> word) {
  SignedPermutation w = SignedPermutation::identity(f, n);
  for (int i : word) w = w.apply_generator(i);
  return w;
}

int length(const SignedPermutation& w) {
  // Signed inversions plus a bar contribution: |w(p)| per bar for B/C,
  // |w(p)| - 1 per bar for D.
  const auto& v = w.values();
  int len = 0;
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) ++len;
  for (int x : v)
    if (x < 0) len += (w.family() == Family::D) ? -x - 1 : -x;
  return len;
}

std::vector<Root> inversion_set(const SignedPermutation& w) {
  const SignedPermutation inv = w.inverse();
  std::vector<Root> out;
  for (const Root& r : positive_roots(w.family(), w.n()))
    if (!act(inv, r).is_positive()) out.push_back(r);
  return out;
}

Root inversion_sum(const SignedPermutation& w) {
  Root sum = Root::zero(w.size());
  for (const Root& r : inversion_set(w)) sum = sum + r;
  return sum;
}

std::vector<Root> beta_sequence(Family f, int n, std::span<const int> word) {
  SignedPermutation prefix = SignedPermutation::identity(f, n);
  std::vector<Root> betas;
  std::set<Root> seen;
  for (int letter : word) {
    Root beta = act(prefix, Root::simple(f, n, letter));
    if (!beta.is_positive())
      throw std::invalid_argument("word is not reduced: negative beta");
    if (!seen.insert(beta).second)
      throw std::invalid_argument("word is not reduced: repeated beta");
    betas.push_back(std::move(beta));
    prefix = prefix.apply_generator(letter);
  }
  return betas;
}

bool is_reduced(Family f, int n, std::span<const int> word) {
  try {
    beta_sequence(f, n, word);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::optional<Root> covering_root(const SignedPermutation& w,
                                  const SignedPermutation& w2) {
  if (length(w) != length(w2) + 1) return std::nullopt;
  const SignedPermutation q = w * w2.inverse();
  std::optional<Root> beta;
  for (const Root& r : positive_roots(w.family(), w.n())) {
    if (act(q, r) == -r) {
      if (beta) return std::nullopt;  // a reflection negates a unique root line
      beta = r;
    }
  }
  if (!beta) return std::nullopt;
  if (!(reflection(w.family(), w.n(), *beta) == q)) return std::nullopt;
  return beta;
}

ReducedWord random_reduced_word(const SignedPermutation& w,
                                std::mt19937& rng) {
  SignedPermutation cur = w;
  ReducedWord rev;
  while (!cur.is_identity()) {
    std::vector<int> descents;
    for (int i = 0; i < cur.num_generators(); ++i)
      if (cur.right_descent(i)) descents.push_back(i);
    std::uniform_int_distribution<size_t> pick(0, descents.size() - 1);
    const int i = descents[pick(rng)];
    rev.push_back(i);
    cur = cur.apply_generator(i);
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

}  // namespace halfshift

#include "halfshift/boundary.hpp"

#include <stdexcept>

#include "halfshift/weyl.hpp"

namespace halfshift {

int kappa_closed_form(const GrassmannianSpec& spec, const DoublePartition& p,
                      const Removal& rem) {
  const int t = rem.t, k = spec.k, n = spec.n;
  if (rem.kind == Removal::Kind::Alpha) return t + p.alpha_part(t) - 1;
  switch (spec.family) {
    case Family::C:
      switch (rem.sub) {
        case Removal::Sub::Diagonal: return t + k;
        case Removal::Sub::Related: return t + 2 * k - rem.index + 1;
        case Removal::Sub::NonRelated: return t + k + n - rem.index + 1;
        default: break;
      }
      break;
    case Family::B:
      switch (rem.sub) {
        case Removal::Sub::Diagonal: return t + 2 * k + t - 1;
        case Removal::Sub::Related: return t + 2 * k - rem.index;
        case Removal::Sub::NonRelated: return t + k + n - rem.index;
        default: break;
      }
      break;
    case Family::D:
      switch (rem.sub) {
        case Removal::Sub::Related: return t + 2 * k - rem.index - 1;
        case Removal::Sub::NonRelated: return t + k + n - rem.index;
        default: break;
      }
      break;
  }
  throw std::invalid_argument("removal kind not applicable to the family");
}

int chi(const GrassmannianSpec& spec, const DoublePartition& p,
        const Removal& rem) {
  int x = 1;
  if (rem.kind == Removal::Kind::Alpha) {
    for (int i = rem.t + 1; i <= spec.k; ++i) x += p.alpha_part(i);
    x += p.lambda_weight();
  } else {
    for (int i = rem.t + 1; i <= p.rows(); ++i) x += p.lambda[i - 1];
  }
  return x;
}

CoefficientReport coefficient(const GrassmannianSpec& spec,
                              const DoublePartition& p,
                              const DoublePartition& q) {
  CoefficientReport report;
  if (p.weight() != q.weight() + 1) return report;
  for (const auto& [rem, result] : enumerate_removals(spec, p)) {
    if (!(result == q)) continue;
    report.kappa = kappa_closed_form(spec, p, rem);
    report.chi = chi(spec, p, rem);
    report.c = (report.kappa % 2 != 0) ? 0 : (report.chi % 2 != 0 ? -2 : 2);
    report.beta = covering_root(partition_to_permutation(spec, p),
                                partition_to_permutation(spec, q));
    return report;
  }
  // Covering pairs that are not box removals exist (the diagram of q need
  // not sit inside the diagram of p), and their coefficient can be nonzero;
  // fall back to the inversion-sum route, with the sign read off the
  // deleted-letter position of the canonical row-reading word.
  const SignedPermutation w = partition_to_permutation(spec, p);
  const SignedPermutation w2 = partition_to_permutation(spec, q);
  const auto beta = covering_root(w, w2);
  if (!beta) return report;
  const auto [kappa, root] = kappa_phi_oracle(spec, p, q);
  report.kappa = kappa;
  report.beta = root;
  report.method = "phi-oracle";
  const auto betas =
      beta_sequence(spec.family, spec.n, row_reading_word(spec, p));
  for (size_t i = 0; i < betas.size(); ++i)
    if (betas[i] == *beta) {
      report.chi = static_cast<int>(i) + 1;
      break;
    }
  report.c = (kappa % 2 != 0) ? 0 : (report.chi % 2 != 0 ? -2 : 2);
  return report;
}

std::pair<int, Root> kappa_phi_oracle(const GrassmannianSpec& spec,
                                      const DoublePartition& p,
                                      const DoublePartition& q) {
  const SignedPermutation w = partition_to_permutation(spec, p);
  const SignedPermutation w2 = partition_to_permutation(spec, q);
  const auto beta = covering_root(w, w2);
  if (!beta)
    throw std::invalid_argument("not a covering pair / reflection quotient");
  const Root diff = inversion_sum(w) - inversion_sum(w2);
  bool have = false;
  long long kappa = 0;
  for (int i = 1; i <= diff.size(); ++i) {
    const int b = beta->coeff(i), d = diff.coeff(i);
    if (b == 0) {
      if (d != 0)
        throw std::invalid_argument("phi difference not a multiple of beta");
      continue;
    }
    if (d % b != 0)
      throw std::invalid_argument("phi difference not an exact multiple");
    const long long ratio = d / b;
    if (have && ratio != kappa)
      throw std::invalid_argument("phi difference not a single multiple");
    kappa = ratio;
    have = true;
  }
  return {static_cast<int>(kappa), *beta};
}

SigmaOracleResult kappa_sigma_oracle(const GrassmannianSpec& spec,
                                     const DoublePartition& p,
                                     const DoublePartition& q) {
  const ReducedWord word = row_reading_word(spec, p);
  const SignedPermutation w2 = partition_to_permutation(spec, q);
  const Family f = spec.family;
  const int n = spec.n;

  int position = 0;
  for (size_t i = 0; i < word.size() && position == 0; ++i) {
    ReducedWord sub;
    sub.reserve(word.size() - 1);
    sub.insert(sub.end(), word.begin(), word.begin() + i);
    sub.insert(sub.end(), word.begin() + i + 1, word.end());
    if (evaluate_word(f, n, sub) == w2) position = static_cast<int>(i) + 1;
  }
  if (position == 0)
    throw std::invalid_argument("no deleted letter produces the target");

  const Root alpha_i = Root::simple(f, n, word[position - 1]);
  const SignedPermutation tail = evaluate_word(
      f, n, std::span<const int>(word).subspan(position));
  long long sigma = 0;
  const long long norm = alpha_i.dot(alpha_i);
  for (const Root& beta : inversion_set(tail)) {
    const long long num = 2 * alpha_i.dot(beta);
    if (num % norm != 0) throw std::logic_error("non-integer Cartan pairing");
    sigma += num / norm;
  }
  SigmaOracleResult res;
  res.sigma = static_cast<int>(sigma);
  res.kappa = static_cast<int>(1 - sigma);
  res.position = position;
  return res;
}

}  // namespace halfshift

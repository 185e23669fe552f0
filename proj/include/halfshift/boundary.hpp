#pragma once

#include <optional>
#include <string>

#include "halfshift/double_partition.hpp"
#include "halfshift/grassmannian.hpp"
#include "halfshift/root.hpp"
#include "halfshift/shapes.hpp"

namespace halfshift {

// Boundary coefficient c = (-1)^chi (1 + (-1)^kappa) of a covering pair,
// together with the covering root. c is always 0 or +-2.
struct CoefficientReport {
  int kappa = 0;
  int chi = 0;
  int c = 0;
  std::optional<Root> beta;
  std::string method = "closed-form";
};

// kappa(w,w') = t + A(t) from the removal taxonomy; A(t) depends on the
// family and on whether the box leaves alpha, the staircase diagonal, a
// related column or a non-related one.
int kappa_closed_form(const GrassmannianSpec& spec, const DoublePartition& p,
                      const Removal& rem);

// chi = 1 + alpha_{t+1} + ... + alpha_k + |lambda| for an alpha removal,
// 1 + lambda_{t+1} + ... + lambda_r for a lambda removal; this equals the
// row-reading position of the removed box's letter.
int chi(const GrassmannianSpec& spec, const DoublePartition& p,
        const Removal& rem);

// Full coefficient; zero whenever q is not obtained from p by one removal
// (in particular whenever the dimension gap is not one).
CoefficientReport coefficient(const GrassmannianSpec& spec,
                              const DoublePartition& p,
                              const DoublePartition& q);

// kappa recovered from the inversion sums: w = s_beta w', and
// phi(w) - phi(w') must be an exact integer multiple of beta.
// Throws when the pair is not covering or the division is inexact.
std::pair<int, Root> kappa_phi_oracle(const GrassmannianSpec& spec,
                                      const DoublePartition& p,
                                      const DoublePartition& q);

struct SigmaOracleResult {
  int kappa = 0;   // 1 - sigma
  int sigma = 0;
  int position = 0;  // deleted letter of the row-reading word (1-based)
};

// kappa = 1 - sigma where sigma pairs the deleted letter's simple root
// against the inversion set of the word's tail. The deleted position is
// found by scanning the row-reading word of p for the first subword equal
// to the permutation of q.
SigmaOracleResult kappa_sigma_oracle(const GrassmannianSpec& spec,
                                     const DoublePartition& p,
                                     const DoublePartition& q);

}  // namespace halfshift

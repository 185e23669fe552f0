#pragma once

#include <optional>
#include <random>
#include <span>
#include <vector>

#include "halfshift/root.hpp"
#include "halfshift/signed_permutation.hpp"

namespace halfshift {

// Words in the simple reflections, letters in 0..letters(f,n)-1.
using ReducedWord = std::vector<int>;

// Evaluates s_{j_1} * ... * s_{j_r} left to right.
SignedPermutation evaluate_word(Family f, int n, std::span<const int> word);

// Coxeter length. Computed by the signed inversion count; agrees with the
// size of the inversion set and with any reduced word length.
int length(const SignedPermutation& w);

// Positive roots sent to negative roots by w^-1.
std::vector<Root> inversion_set(const SignedPermutation& w);

// Sum of the inversion set (a weight, not generally a root).
Root inversion_sum(const SignedPermutation& w);

// beta_t = s_{j_1} ... s_{j_{t-1}} (alpha_{j_t}) for each letter of the word.
// Throws std::invalid_argument when the word is not reduced (a beta_t comes
// out negative or repeats an earlier one).
std::vector<Root> beta_sequence(Family f, int n, std::span<const int> word);

bool is_reduced(Family f, int n, std::span<const int> word);

// The unique positive root beta with w = s_beta * w2, when w covers w2
// (length gap one and w * w2^-1 a reflection); nullopt otherwise.
std::optional<Root> covering_root(const SignedPermutation& w,
                                  const SignedPermutation& w2);

// Uniformly chosen descent walk from w down to the identity, reversed.
ReducedWord random_reduced_word(const SignedPermutation& w, std::mt19937& rng);

}  // namespace halfshift

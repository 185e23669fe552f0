#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "halfshift/family.hpp"
#include "halfshift/signed_permutation.hpp"

namespace halfshift {

// Integer vector in the epsilon basis e_1..e_size. Also used for weights
// such as inversion sums, which need not be roots of any system.
// Barred indices follow the convention e_{-a} = -e_a.
class Root {
 public:
  Root() = default;
  explicit Root(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {}

  static Root zero(int size) { return Root(std::vector<int>(size, 0)); }

  // e_a for a > 0, -e_{|a|} for a < 0.
  static Root epsilon(int size, int a, int scale = 1);

  // Simple root alpha_i of the family on letters(f,n) coordinates:
  //   alpha_0 = e_1 (B), 2e_1 (C), e_1 + e_2 (D); alpha_i = e_{i+1} - e_i.
  static Root simple(Family f, int n, int i);

  int size() const { return static_cast<int>(coeffs_.size()); }
  int coeff(int i) const { return coeffs_[i - 1]; }  // 1-based
  const std::vector<int>& coeffs() const { return coeffs_; }

  bool is_zero() const;

  // Positive iff the highest-index nonzero coefficient is positive; under
  // the simple-root convention above this matches the usual positive set.
  bool is_positive() const;

  // Shape check: +-e_a +- e_b (all families), +-e_a (B), +-2e_a (C).
  bool is_root_of(Family f) const;

  long long dot(const Root& rhs) const;

  Root operator-() const;
  Root operator+(const Root& rhs) const;
  Root operator-(const Root& rhs) const;

  bool operator==(const Root& rhs) const { return coeffs_ == rhs.coeffs_; }
  bool operator<(const Root& rhs) const { return coeffs_ < rhs.coeffs_; }

  // Compact display, e.g. "e6+e8", "e5-e3", "2e1"; positive terms first.
  std::string to_string() const;

 private:
  std::vector<int> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Root& r);

// All positive roots of the family on letters(f,n) coordinates.
std::vector<Root> positive_roots(Family f, int n);

// Linear action permuting and signing epsilon coordinates.
Root act(const SignedPermutation& w, const Root& r);

// The reflection s_beta as a signed permutation; beta must satisfy
// is_root_of(f).
SignedPermutation reflection(Family f, int n, const Root& beta);

}  // namespace halfshift

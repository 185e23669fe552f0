#pragma once

#include <compare>
#include <ostream>
#include <vector>

#include "halfshift/family.hpp"

namespace halfshift {

// One-line barred permutation: value(p) = w(p) for positions 1..size(), a
// negative value encoding a bar. Signed action extends by w(-a) = -w(a).
//
// Generator conventions (right multiplication, w.apply_generator(i) = w*s_i):
//   s_i, i>=1   swaps the entries at positions i and i+1;
//   s_0 (B/C)   negates the entry at position 1;
//   s_0 (D)     replaces (w(1), w(2)) by (-w(2), -w(1)).
class SignedPermutation {
 public:
  SignedPermutation(Family family, int n, std::vector<int> values);

  static SignedPermutation identity(Family family, int n);

  Family family() const { return family_; }
  int n() const { return n_; }
  int size() const { return static_cast<int>(values_.size()); }
  int num_generators() const { return size(); }

  const std::vector<int>& values() const { return values_; }

  // w(p) for 1 <= p <= size().
  int value(int pos) const { return values_[pos - 1]; }

  // Signed action: w(a) for 1 <= |a| <= size().
  int operator()(int a) const {
    return a > 0 ? values_[a - 1] : -values_[-a - 1];
  }

  bool is_identity() const;

  SignedPermutation inverse() const;

  // Function composition: (u*v)(a) = u(v(a)).
  SignedPermutation operator*(const SignedPermutation& rhs) const;

  // w * s_i, 0 <= i < num_generators().
  SignedPermutation apply_generator(int i) const;

  // True iff l(w*s_i) = l(w) - 1.
  bool right_descent(int i) const;

  bool operator==(const SignedPermutation& rhs) const {
    return family_ == rhs.family_ && values_ == rhs.values_;
  }
  bool operator<(const SignedPermutation& rhs) const {
    return values_ < rhs.values_;
  }

 private:
  Family family_;
  int n_;
  std::vector<int> values_;
};

std::ostream& operator<<(std::ostream& os, const SignedPermutation& w);

}  // namespace halfshift

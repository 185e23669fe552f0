#include "halfshift/signed_permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace halfshift {

namespace {

void check_values(Family family, int n, const std::vector<int>& values) {
  const int size = letters(family, n);
  if (static_cast<int>(values.size()) != size)
    throw std::invalid_argument("one-line notation has the wrong size");
  std::vector<char> seen(size + 1, 0);
  int negatives = 0;
  for (int v : values) {
    const int a = std::abs(v);
    if (a < 1 || a > size || seen[a])
      throw std::invalid_argument("values are not a signed permutation");
    seen[a] = 1;
    if (v < 0) ++negatives;
  }
  if (family == Family::D && negatives % 2 != 0)
    throw std::invalid_argument("family D requires an even number of bars");
}

}  // namespace

SignedPermutation::SignedPermutation(Family family, int n,
                                     std::vector<int> values)
    : family_(family), n_(n), values_(std::move(values)) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  check_values(family_, n_, values_);
}

SignedPermutation SignedPermutation::identity(Family family, int n) {
  std::vector<int> values(letters(family, n));
  std::iota(values.begin(), values.end(), 1);
  return SignedPermutation(family, n, std::move(values));
}

bool SignedPermutation::is_identity() const {
  for (int p = 1; p <= size(); ++p)
    if (value(p) != p) return false;
  return true;
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> inv(values_.size());
  for (int p = 1; p <= size(); ++p) {
    const int v = values_[p - 1];
    if (v > 0)
      inv[v - 1] = p;
    else
      inv[-v - 1] = -p;
  }
  return SignedPermutation(family_, n_, std::move(inv));
}

SignedPermutation SignedPermutation::operator*(
    const SignedPermutation& rhs) const {
  if (family_ != rhs.family_ || size() != rhs.size())
    throw std::invalid_argument("mismatched groups in product");
  std::vector<int> out(values_.size());
  for (int p = 1; p <= size(); ++p) out[p - 1] = (*this)(rhs.value(p));
  return SignedPermutation(family_, n_, std::move(out));
}

SignedPermutation SignedPermutation::apply_generator(int i) const {
  if (i < 0 || i >= num_generators())
    throw std::invalid_argument("generator index out of range");
  std::vector<int> out = values_;
  if (i >= 1) {
    std::swap(out[i - 1], out[i]);
  } else if (family_ == Family::D) {
    const int a = out[0], b = out[1];
    out[0] = -b;
    out[1] = -a;
  } else {
    out[0] = -out[0];
  }
  return SignedPermutation(family_, n_, std::move(out));
}

bool SignedPermutation::right_descent(int i) const {
  if (i < 0 || i >= num_generators())
    throw std::invalid_argument("generator index out of range");
  if (i >= 1) return value(i) > value(i + 1);
  if (family_ == Family::D) return value(1) + value(2) < 0;
  return value(1) < 0;
}

std::ostream& operator<<(std::ostream& os, const SignedPermutation& w) {
  os << '(';
  for (int p = 1; p <= w.size(); ++p) {
    if (p > 1) os << ',';
    os << w.value(p);
  }
  return os << ')';
}

}  // namespace halfshift

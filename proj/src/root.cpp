#include "halfshift/root.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace halfshift {

Root Root::epsilon(int size, int a, int scale) {
  if (a == 0 || std::abs(a) > size)
    throw std::invalid_argument("epsilon index out of range");
  std::vector<int> c(size, 0);
  c[std::abs(a) - 1] = a > 0 ? scale : -scale;
  return Root(std::move(c));
}

Root Root::simple(Family f, int n, int i) {
  const int size = letters(f, n);
  if (i < 0 || i >= size) throw std::invalid_argument("no such simple root");
  if (i >= 1) return epsilon(size, i + 1) - epsilon(size, i);
  switch (f) {
    case Family::B: return epsilon(size, 1);
    case Family::C: return epsilon(size, 1, 2);
    case Family::D: return epsilon(size, 1) + epsilon(size, 2);
  }
  throw std::logic_error("unreachable");
}

bool Root::is_zero() const {
  for (int c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Root::is_positive() const {
  for (int i = size() - 1; i >= 0; --i)
    if (coeffs_[i] != 0) return coeffs_[i] > 0;
  return false;
}

bool Root::is_root_of(Family f) const {
  int ones = 0, twos = 0, other = 0;
  for (int c : coeffs_) {
    if (c == 0) continue;
    if (std::abs(c) == 1)
      ++ones;
    else if (std::abs(c) == 2)
      ++twos;
    else
      ++other;
  }
  if (other > 0) return false;
  if (ones == 2 && twos == 0) return true;           // +-e_a +- e_b
  if (ones == 1 && twos == 0) return f == Family::B;  // +-e_a
  if (ones == 0 && twos == 1) return f == Family::C;  // +-2e_a
  return false;
}

long long Root::dot(const Root& rhs) const {
  if (size() != rhs.size()) throw std::invalid_argument("size mismatch");
  long long s = 0;
  for (int i = 0; i < size(); ++i)
    s += static_cast<long long>(coeffs_[i]) * rhs.coeffs_[i];
  return s;
}

Root Root::operator-() const {
  std::vector<int> c = coeffs_;
  for (int& x : c) x = -x;
  return Root(std::move(c));
}

Root Root::operator+(const Root& rhs) const {
  if (size() != rhs.size()) throw std::invalid_argument("size mismatch");
  std::vector<int> c = coeffs_;
  for (int i = 0; i < size(); ++i) c[i] += rhs.coeffs_[i];
  return Root(std::move(c));
}

Root Root::operator-(const Root& rhs) const { return *this + (-rhs); }

std::string Root::to_string() const {
  std::ostringstream out;
  bool first = true;
  auto emit = [&](int i, int c) {
    if (c > 0) {
      if (!first) out << '+';
      if (c != 1) out << c;
    } else {
      out << '-';
      if (c != -1) out << -c;
    }
    out << 'e' << i;
    first = false;
  };
  for (int i = 1; i <= size(); ++i)
    if (coeff(i) > 0) emit(i, coeff(i));
  for (int i = 1; i <= size(); ++i)
    if (coeff(i) < 0) emit(i, coeff(i));
  if (first) out << '0';
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const Root& r) {
  return os << r.to_string();
}

std::vector<Root> positive_roots(Family f, int n) {
  const int size = letters(f, n);
  std::vector<Root> out;
  for (int a = 1; a <= size; ++a) {
    if (f == Family::B) out.push_back(Root::epsilon(size, a));
    if (f == Family::C) out.push_back(Root::epsilon(size, a, 2));
  }
  for (int i = 1; i <= size; ++i)
    for (int j = i + 1; j <= size; ++j) {
      out.push_back(Root::epsilon(size, j) - Root::epsilon(size, i));
      out.push_back(Root::epsilon(size, j) + Root::epsilon(size, i));
    }
  return out;
}

Root act(const SignedPermutation& w, const Root& r) {
  if (w.size() != r.size()) throw std::invalid_argument("size mismatch");
  std::vector<int> c(r.size(), 0);
  for (int a = 1; a <= r.size(); ++a) {
    const int x = r.coeff(a);
    if (x == 0) continue;
    const int b = w(a);
    c[std::abs(b) - 1] += b > 0 ? x : -x;
  }
  return Root(std::move(c));
}

SignedPermutation reflection(Family f, int n, const Root& beta) {
  if (!beta.is_root_of(f))
    throw std::invalid_argument("not a root of the family");
  const int size = letters(f, n);
  std::vector<int> vals(size);
  for (int p = 1; p <= size; ++p) vals[p - 1] = p;
  int a = 0, b = 0;  // nonzero coordinates
  for (int i = 1; i <= size; ++i)
    if (beta.coeff(i) != 0) (a == 0 ? a : b) = i;
  if (b == 0) {
    vals[a - 1] = -a;  // s_{e_a} or s_{2e_a}
  } else if (beta.coeff(a) * beta.coeff(b) < 0) {
    vals[a - 1] = b;  // s_{e_b - e_a}
    vals[b - 1] = a;
  } else {
    vals[a - 1] = -b;  // s_{e_a + e_b}
    vals[b - 1] = -a;
  }
  return SignedPermutation(f, n, std::move(vals));
}

}  // namespace halfshift

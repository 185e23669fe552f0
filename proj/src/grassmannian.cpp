#include "halfshift/grassmannian.hpp"

#include <sstream>
#include <stdexcept>

namespace halfshift {

void GrassmannianSpec::validate() const {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (k < 0 || k > n - 1)
    throw std::invalid_argument("k must satisfy 0 <= k <= n-1");
}

std::string GrassmannianSpec::manifold_name() const {
  std::ostringstream out;
  switch (family) {
    case Family::B: out << "OG(" << n - k << "," << 2 * n + 1 << ")"; break;
    case Family::C: out << "IG(" << n - k << "," << 2 * n << ")"; break;
    case Family::D: out << "OG(" << n + 1 - k << "," << 2 * n + 2 << ")"; break;
  }
  return out.str();
}

namespace {

long long binomial(int m, int r) {
  if (r < 0 || r > m) return 0;
  long long b = 1;
  for (int i = 1; i <= r; ++i) b = b * (m - r + i) / i;
  return b;
}

}  // namespace

long long GrassmannianSpec::expected_cell_count() const {
  validate();
  if (family != Family::D) return (1LL << (n - k)) * binomial(n, k);
  // Deleting alpha_0 or alpha_1 from the D diagram leaves an A_n chain.
  if (k <= 1) return 1LL << n;
  return (1LL << (n + 1 - k)) * binomial(n + 1, k);
}

}  // namespace halfshift

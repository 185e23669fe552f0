#include "halfshift/double_partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "halfshift/shapes.hpp"

namespace halfshift {

DoublePartition::DoublePartition(std::vector<int> a, std::vector<int> l, int t)
    : alpha(std::move(a)), lambda(std::move(l)), dtype(t) {
  while (!alpha.empty() && alpha.back() == 0) alpha.pop_back();
}

int DoublePartition::alpha_weight() const {
  return std::accumulate(alpha.begin(), alpha.end(), 0);
}

int DoublePartition::lambda_weight() const {
  return std::accumulate(lambda.begin(), lambda.end(), 0);
}

std::string DoublePartition::display() const {
  std::ostringstream out;
  out << *this;
  return out.str();
}

bool DoublePartition::operator<(const DoublePartition& rhs) const {
  if (alpha != rhs.alpha) return alpha < rhs.alpha;
  if (lambda != rhs.lambda) return lambda < rhs.lambda;
  return dtype < rhs.dtype;
}

std::ostream& operator<<(std::ostream& os, const DoublePartition& p) {
  os << (p.dtype == 1 ? '[' : '(');
  for (size_t i = 0; i < p.alpha.size(); ++i) os << (i ? "," : "") << p.alpha[i];
  os << '|';
  for (size_t i = 0; i < p.lambda.size(); ++i)
    os << (i ? "," : "") << p.lambda[i];
  return os << (p.dtype == 2 ? ']' : ')');
}

bool valid_shape(const GrassmannianSpec& spec, const DoublePartition& p) {
  try {
    validate_shape(spec, p);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

void validate_shape(const GrassmannianSpec& spec, const DoublePartition& p) {
  spec.validate();
  if (static_cast<int>(p.alpha.size()) > spec.k)
    throw std::invalid_argument("alpha has more than k parts");
  for (size_t i = 0; i < p.alpha.size(); ++i) {
    if (p.alpha[i] < 0 || p.alpha[i] > spec.alpha_cols())
      throw std::invalid_argument("alpha part outside the rectangle");
    if (i + 1 < p.alpha.size() && p.alpha[i] < p.alpha[i + 1])
      throw std::invalid_argument("alpha is not weakly decreasing");
  }
  const int r = p.rows();
  for (int i = 0; i < r; ++i) {
    if (p.lambda[i] < 1 || p.lambda[i] > spec.n)
      throw std::invalid_argument("lambda part out of range");
    if (i + 1 < r && p.lambda[i] <= p.lambda[i + 1])
      throw std::invalid_argument("lambda is not strictly decreasing");
  }
  if (spec.k >= 1 && p.alpha_part(spec.k) < r)
    throw std::invalid_argument("alpha_k < len(lambda)");
  if (spec.family != Family::D) {
    if (p.dtype != -1)
      throw std::invalid_argument("dtype is a family D tag");
    return;
  }
  // Family D type tag.
  if (spec.k == 0) {
    const int forced = (r % 2 == 0) ? 1 : 2;
    if (p.dtype != forced)
      throw std::invalid_argument("dtype is forced by the parity of len(lambda) at k=0");
  } else if (p.alpha_part(spec.k) == r) {
    if (p.dtype != 0)
      throw std::invalid_argument("alpha_k = len(lambda) requires dtype 0");
  } else {
    if (p.dtype != 1 && p.dtype != 2)
      throw std::invalid_argument("alpha_k > len(lambda) requires dtype 1 or 2");
  }
}

bool is_cell(const GrassmannianSpec& spec, const DoublePartition& p) {
  if (!valid_shape(spec, p)) return false;
  if (spec.family != Family::D || spec.k >= 2) return true;
  // At k <= 1 some D shapes induce non-minimal permutations.
  try {
    (void)partition_to_permutation(spec, p);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace halfshift

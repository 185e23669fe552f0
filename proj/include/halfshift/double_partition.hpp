#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "halfshift/grassmannian.hpp"

namespace halfshift {

// Index of a Schubert variety: top partition alpha (weakly decreasing, at
// most k parts, trailing zeros not stored) and strict bottom partition
// lambda. For family D a type tag distinguishes elements with
// alpha_k = len(lambda) (type 0) from the two flavours with
// alpha_k > len(lambda) (types 1 and 2); dtype is -1 outside family D.
struct DoublePartition {
  std::vector<int> alpha;
  std::vector<int> lambda;
  int dtype = -1;

  DoublePartition() = default;
  DoublePartition(std::vector<int> a, std::vector<int> l, int t = -1);

  int alpha_part(int i) const {  // 1-based, zero beyond stored parts
    return (i >= 1 && i <= static_cast<int>(alpha.size())) ? alpha[i - 1] : 0;
  }
  int rows() const { return static_cast<int>(lambda.size()); }
  int alpha_weight() const;
  int lambda_weight() const;
  int weight() const { return alpha_weight() + lambda_weight(); }

  bool empty() const { return alpha.empty() && lambda.empty(); }

  // Display, e.g. "(5,5,4|8,7,4,1)", "[5,4,4|7,6,1)" for type 1,
  // "(5,4,4|7,6,1]" for type 2.
  std::string display() const;

  bool operator==(const DoublePartition& rhs) const {
    return alpha == rhs.alpha && lambda == rhs.lambda && dtype == rhs.dtype;
  }
  bool operator<(const DoublePartition& rhs) const;
};

std::ostream& operator<<(std::ostream& os, const DoublePartition& p);

// Shape validity: alpha fits the rectangle, lambda strict with parts <= n,
// alpha_k >= len(lambda) for k >= 1, and the D type tag is consistent
// (0 iff alpha_k = len(lambda); forced by the parity of len(lambda) at k=0).
bool valid_shape(const GrassmannianSpec& spec, const DoublePartition& p);
void validate_shape(const GrassmannianSpec& spec, const DoublePartition& p);

// Cell validity: valid shape whose permutation is a minimal coset
// representative. Equivalent to valid_shape except for family D with k = 1,
// where some shapes induce non-minimal permutations and are rejected.
bool is_cell(const GrassmannianSpec& spec, const DoublePartition& p);

}  // namespace halfshift

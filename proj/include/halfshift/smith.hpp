#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace halfshift {

using BigInt = boost::multiprecision::cpp_int;

struct Triplet {
  int row = 0, col = 0;
  long long value = 0;
};

struct SmithResult {
  std::vector<BigInt> invariant_factors;  // d_1 | d_2 | ..., all positive
  int rank = 0;
};

// Exact Smith normal form by pivot-minimizing elimination over
// arbitrary-precision integers.
SmithResult smith_normal_form(int rows, int cols,
                              const std::vector<Triplet>& entries);

}  // namespace halfshift

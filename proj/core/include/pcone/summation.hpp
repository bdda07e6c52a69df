#pragma once

#include <span>
#include <vector>

namespace pcone {

// Fixed-order pairwise reduction. For a given input sequence the result is
// bit-reproducible, so two call sites that build element-wise identical
// sequences obtain bit-identical sums. All measure totals and dual volumes
// are reduced through this function.
double pairwise_sum(std::span<const double> xs);

inline double pairwise_sum(const std::vector<double>& xs) {
  return pairwise_sum(std::span<const double>(xs));
}

}  // namespace pcone

#pragma once

#include <vector>

namespace polyra {

/// Booking limits 0 <= n_1 <= ... <= n_K = C. Type k (and everything below
/// it) may occupy at most n_k of the per-period capacity.
struct NestSizes {
  std::vector<double> n;

  int size() const { return static_cast<int>(n.size()); }
  /// n_i - n_{i-1} with n_0 = 0; 1-based i.
  double delta(int i) const {
    return i == 1 ? n[0] : n[static_cast<size_t>(i - 1)] - n[static_cast<size_t>(i - 2)];
  }
};

/// Throws std::invalid_argument unless sizes are nondecreasing, nonnegative,
/// and end at C (within eps).
void validate_nests(const NestSizes& nests, double C, double eps);

} // namespace polyra

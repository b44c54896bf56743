#pragma once

#include <vector>

#include "elemop/exact/matrix.hpp"

namespace elemop {

/// Visits every point of {0..top}^n in lexicographic order, last coordinate
/// fastest, until the callback returns false. The callback also receives the
/// coordinate that was just incremented (-1 at the origin); every coordinate
/// after it has been reset to zero.
template <typename F>
void for_each_grid_point(Index n, long top, F&& f) {
  std::vector<long> t(static_cast<std::size_t>(n), 0);
  Index moved = -1;
  for (;;) {
    if (!f(static_cast<const std::vector<long>&>(t), moved)) return;
    Index k = n - 1;
    while (k >= 0 && t[static_cast<std::size_t>(k)] == top) {
      t[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) return;
    ++t[static_cast<std::size_t>(k)];
    moved = k;
  }
}

/// (top + 1)^n, saturating at cap + 1 so callers can compare against a budget.
inline unsigned long long grid_size(Index n, long top, unsigned long long cap) {
  unsigned long long size = 1;
  for (Index i = 0; i < n; ++i) {
    size *= static_cast<unsigned long long>(top + 1);
    if (size > cap) return cap + 1;
  }
  return size;
}

}  // namespace elemop

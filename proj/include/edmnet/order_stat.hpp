#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace edmnet {

// 1-based rank of the type-1 empirical p-quantile among m sorted values:
// ceil(p*m), clamped to [1, m]. The guard keeps 0.95*100 at rank 95.
inline std::size_t quantile_rank(double p, std::size_t m) {
  const double scaled = p * static_cast<double>(m);
  auto k = static_cast<std::size_t>(std::ceil(scaled - 1e-9 * std::max(1.0, scaled)));
  return std::clamp<std::size_t>(k, 1, m);
}

/// Type-1 empirical quantile (no interpolation). `values` must be non-empty.
inline double empirical_quantile(std::span<const double> values, double p) {
  std::vector<double> sorted(values.begin(), values.end());
  const std::size_t k = quantile_rank(p, sorted.size());
  std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(k - 1), sorted.end());
  return sorted[k - 1];
}

}  // namespace edmnet

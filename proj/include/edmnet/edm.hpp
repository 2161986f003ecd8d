#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "edmnet/ingest.hpp"
#include "edmnet/matrix.hpp"

namespace edmnet {

/// How much of the pairwise radius distribution counts as "extreme".
struct TailPolicy {
  double quantile = 0.10;    // fraction of radii retained
  std::size_t min_tail = 20;  // smallest acceptable N_n

  void validate() const;
};

struct EdmEstimate {
  double edm = 0.0;
  std::size_t tail_count = 0;
};

struct EdmMatrix {
  std::vector<std::string> tickers;
  Matrix values;       // symmetric, diagonal 0.5
  Matrix tail_counts;  // symmetric, N_n per pair (diagonal 0)
};

/// Tail cross-moment estimator: mean of x*y/(x^2+y^2) over observations whose
/// Euclidean radius reaches the empirical (1 - quantile) radius quantile.
/// Zero-radius observations are ignored entirely.
EdmEstimate edm_pair(std::span<const double> x, std::span<const double> y, const TailPolicy& policy);

EdmMatrix edm_matrix(const ReturnPanel& panel, const TailPolicy& policy);

}  // namespace edmnet

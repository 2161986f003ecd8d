#include "edmnet/edm.hpp"

#include <algorithm>
#include <cmath>

#include "edmnet/error.hpp"
#include "edmnet/order_stat.hpp"

namespace edmnet {

void TailPolicy::validate() const {
  require(quantile > 0.0 && quantile < 1.0, "tail quantile must lie in (0, 1)");
  require(min_tail >= 2, "min_tail must be at least 2");
}

namespace {

// x*y/(x^2+y^2) evaluated after scaling by max(|x|,|y|): no overflow and
// exactly 1/2 when x == y.
double angular_product(double x, double y) {
  const double s = std::max(std::abs(x), std::abs(y));
  const double a = x / s;
  const double b = y / s;
  return a * b / (a * a + b * b);
}

}  // namespace

EdmEstimate edm_pair(std::span<const double> x, std::span<const double> y, const TailPolicy& policy) {
  policy.validate();
  require(x.size() == y.size(), "series lengths differ");
  const double needed = static_cast<double>(policy.min_tail) / policy.quantile;
  require(static_cast<double>(x.size()) >= needed - 1e-9,
          "series length " + std::to_string(x.size()) + " below min_tail/quantile = " + std::to_string(needed));

  std::vector<double> radii;
  radii.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = std::hypot(x[i], y[i]);
    if (r > 0.0) radii.push_back(r);
  }
  if (radii.empty()) fail(Errc::degenerate_series, "all pairwise radii are zero");

  const double threshold = empirical_quantile(radii, 1.0 - policy.quantile);

  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = std::hypot(x[i], y[i]);
    if (r > 0.0 && r >= threshold) {
      sum += angular_product(x[i], y[i]);
      ++count;
    }
  }
  if (count < policy.min_tail)
    fail(Errc::insufficient_tail,
         "tail holds " + std::to_string(count) + " observations, need " + std::to_string(policy.min_tail));
  return {std::clamp(sum / static_cast<double>(count), -0.5, 0.5), count};
}

EdmMatrix edm_matrix(const ReturnPanel& panel, const TailPolicy& policy) {
  const std::size_t n = panel.assets();
  require(n >= 2, "EDM matrix needs at least 2 assets");

  std::vector<std::vector<double>> columns(n);
  for (std::size_t i = 0; i < n; ++i) columns[i] = panel.returns.column(i);

  EdmMatrix out{panel.tickers, Matrix(n, n), Matrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    out.values(i, i) = 0.5;
    for (std::size_t j = i + 1; j < n; ++j) {
      EdmEstimate est;
      try {
        est = edm_pair(columns[i], columns[j], policy);
      } catch (const Error& e) {
        throw Error(e.code(), "EDM(" + panel.tickers[i] + ", " + panel.tickers[j] + "): " + e.what());
      }
      out.values(i, j) = out.values(j, i) = est.edm;
      out.tail_counts(i, j) = out.tail_counts(j, i) = static_cast<double>(est.tail_count);
    }
  }
  return out;
}

}  // namespace edmnet

#include "edmnet/risk.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "edmnet/error.hpp"
#include "edmnet/order_stat.hpp"
#include "edmnet/simplex.hpp"

namespace edmnet::risk {

namespace {

void check_series(std::span<const double> losses, double level) {
  require(level > 0.0 && level < 1.0, "confidence level must lie in (0, 1)");
  if (losses.size() < kMinObservations)
    fail(Errc::short_series, "need at least " + std::to_string(kMinObservations) + " observations, have " +
                                 std::to_string(losses.size()));
}

}  // namespace

double var(std::span<const double> losses, double alpha) {
  check_series(losses, alpha);
  return empirical_quantile(losses, alpha);
}

double es(std::span<const double> losses, double alpha) {
  const double threshold = var(losses, alpha);
  double sum = 0.0;
  std::size_t count = 0;
  for (double l : losses)
    if (l > threshold) {
      sum += l;
      ++count;
    }
  return count == 0 ? threshold : sum / static_cast<double>(count);
}

QuantileFit quantile_regression(std::span<const double> y, std::span<const double> x, double q) {
  require(y.size() == x.size(), "quantile regression series lengths differ");
  check_series(y, q);
  const std::size_t t = y.size();

  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  if (*lo == *hi) return {empirical_quantile(y, q), 0.0, true};

  // Dual form: max y'a  s.t.  sum a = (1-q) T,  sum x a = (1-q) sum x,  0 <= a <= 1.
  // The coefficients are the negated multipliers of the two rows.
  lp::LinearProgram dual;
  dual.a = Matrix(2, t);
  dual.b = {(1.0 - q) * static_cast<double>(t), (1.0 - q) * std::accumulate(x.begin(), x.end(), 0.0)};
  dual.c.resize(t);
  dual.lower.assign(t, 0.0);
  dual.upper.assign(t, 1.0);
  for (std::size_t k = 0; k < t; ++k) {
    dual.a(0, k) = 1.0;
    dual.a(1, k) = x[k];
    dual.c[k] = -y[k];
  }
  const auto solved = lp::solve(dual);
  if (solved.status != lp::Status::optimal || solved.duals.size() != 2)
    fail(Errc::precondition, std::string("quantile regression LP ended ") + lp::status_name(solved.status));
  return {-solved.duals[0], -solved.duals[1], false};
}

DeltaCovar delta_covar(std::span<const double> i_losses, std::span<const double> j_losses, double q) {
  DeltaCovar out;
  out.fit = quantile_regression(i_losses, j_losses, q);
  out.value = out.fit.slope * (var(j_losses, q) - var(j_losses, 0.5));
  return out;
}

std::vector<double> losses_of(const ReturnPanel& panel, std::size_t asset) {
  auto col = panel.returns.column(asset);
  for (double& v : col) v = -v;
  return col;
}

RiskReport risk_report(const ReturnPanel& panel, double alpha, double q) {
  const std::size_t n = panel.assets();
  RiskReport rep;
  rep.tickers = panel.tickers;
  rep.alpha = alpha;
  rep.q = q;
  rep.var.resize(n);
  rep.es.resize(n);
  rep.delta_covar = Matrix(n, n);
  rep.slopes = Matrix(n, n);
  rep.heat = Matrix(n, n);

  std::vector<std::vector<double>> losses(n);
  for (std::size_t i = 0; i < n; ++i) {
    losses[i] = losses_of(panel, i);
    try {
      rep.var[i] = var(losses[i], alpha);
      rep.es[i] = es(losses[i], alpha);
    } catch (const Error& e) {
      throw Error(e.code(), "risk(" + panel.tickers[i] + "): " + e.what());
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      try {
        const auto d = delta_covar(losses[i], losses[j], q);
        rep.delta_covar(i, j) = d.value;
        rep.slopes(i, j) = d.fit.slope;
        if (d.fit.degenerate_regressor)
          rep.warnings.push_back("CoVaR(" + panel.tickers[i] + " | " + panel.tickers[j] +
                                 "): constant conditioning series, slope set to 0");
      } catch (const Error& e) {
        throw Error(e.code(), "CoVaR(" + panel.tickers[i] + " | " + panel.tickers[j] + "): " + e.what());
      }
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      rep.heat(i, j) = rep.heat(j, i) = 0.5 * (rep.delta_covar(i, j) + rep.delta_covar(j, i));
  return rep;
}

}  // namespace edmnet::risk

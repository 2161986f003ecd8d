#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "edmnet/ingest.hpp"
#include "edmnet/matrix.hpp"

namespace edmnet::risk {

inline constexpr std::size_t kMinObservations = 20;

/// Type-1 empirical alpha-quantile of losses: the ceil(alpha*T)-th smallest.
double var(std::span<const double> losses, double alpha);

/// Mean of losses strictly above var(losses, alpha); var itself when none are.
double es(std::span<const double> losses, double alpha);

struct QuantileFit {
  double intercept = 0.0;
  double slope = 0.0;
  bool degenerate_regressor = false;  // x had zero variance
};

/// Linear quantile regression of y on x at level q (check-loss minimisation).
QuantileFit quantile_regression(std::span<const double> y, std::span<const double> x, double q);

struct DeltaCovar {
  double value = 0.0;
  QuantileFit fit;
};

/// Delta-CoVaR of i given j: slope of i on j at q times (VaR_q(j) - VaR_0.5(j)).
DeltaCovar delta_covar(std::span<const double> i_losses, std::span<const double> j_losses, double q);

struct RiskReport {
  std::vector<std::string> tickers;
  double alpha = 0.95;
  double q = 0.99;
  std::vector<double> var;
  std::vector<double> es;
  Matrix delta_covar;  // (i, j) holds Delta-CoVaR of i given j; zero diagonal
  Matrix slopes;       // quantile-regression slope for each (i, j)
  Matrix heat;         // symmetrised average
  std::vector<std::string> warnings;
};

/// Losses are negated log-returns.
std::vector<double> losses_of(const ReturnPanel& panel, std::size_t asset);

RiskReport risk_report(const ReturnPanel& panel, double alpha, double q);

}  // namespace edmnet::risk

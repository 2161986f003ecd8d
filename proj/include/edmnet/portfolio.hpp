#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "edmnet/ingest.hpp"

namespace edmnet::portfolio {

struct LpProblem {
  std::vector<double> cost;     // ES_i
  std::vector<double> returns;  // R_i
  double cap = 0.1;
  double floor = 0.0;
  double budget = 1.0;
  double min_return = 0.0;

  void validate() const;
};

enum class Status { optimal, infeasible };
const char* status_name(Status s);

struct PortfolioSolution {
  std::vector<double> weights;
  double objective = 0.0;        // sum c_i ES_i
  double achieved_return = 0.0;  // sum c_i R_i
  Status status = Status::infeasible;
  std::size_t iterations = 0;
  std::string message;
};

/// min cost'w  s.t.  sum w = budget,  floor <= w <= cap,  returns'w >= min_return.
PortfolioSolution simplex_solve(const LpProblem& p);

struct OptimizedPortfolio {
  std::vector<std::string> tickers;
  std::vector<double> es;
  std::vector<double> mean_returns;  // mean daily log-return over the window
  Date window_start{};
  Date window_end{};
  std::size_t window_days = 0;
  double alpha = 0.95;
  double cap = 0.1;
  double min_return = 0.0;
  PortfolioSolution solution;
};

OptimizedPortfolio optimize_portfolio(const ReturnPanel& panel, const std::vector<std::string>& members,
                                      double alpha, double cap, double min_return);

struct Book {
  std::string name;
  std::map<std::string, double> weights;
};

struct IntervalResult {
  Date start{};
  Date end{};
  std::map<std::string, double> returns;  // per book
  std::map<std::string, double> risk;     // per book
};

struct BacktestReport {
  std::size_t interval_length = 10;
  std::vector<IntervalResult> intervals;
  std::vector<std::string> books;
};

/// Splits the price panel into consecutive blocks of `interval_length` daily
/// steps (a trailing short block is dropped); each book is rebalanced to its
/// target weights at every block start.
BacktestReport backtest(const PricePanel& prices, const std::vector<Book>& books, std::size_t interval_length);

}  // namespace edmnet::portfolio
